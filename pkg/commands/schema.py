import json

from functions.infrastructure.documents import document_schema, report_schema

SCHEMAS = {"document": document_schema, "report": report_schema}


def run(args) -> None:
    print(json.dumps(SCHEMAS[args.which](), sort_keys=True, indent=2, ensure_ascii=False))


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("schema", parents=parents, help="print a published JSON schema")
    parser.add_argument("which", choices=sorted(SCHEMAS))
    parser.set_defaults(handler=run)

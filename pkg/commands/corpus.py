"""
corpus list | corpus export ID [-o OUT]
"""

import logging

from functions.data_sources.corpus import build, entries
from functions.infrastructure.documents import Report

from .common import emit_structure

logger = logging.getLogger(__name__)


def run_list(args) -> Report:
    listing = [{"id": e.id, "calculus": e.calculus, "kind": e.kind, "description": e.description}
               for e in entries()]
    return Report(command="corpus list", ok=True, exit_code=0, summary={"entries": listing})


def run_export(args) -> Report:
    structure = build(args.id)
    return emit_structure("corpus export", structure, args.output)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("corpus", parents=parents, help="builtin example structures")
    actions = parser.add_subparsers(dest="corpus_action", required=True)
    listing = actions.add_parser("list", parents=parents, help="list corpus entries")
    listing.set_defaults(handler=run_list)
    export = actions.add_parser("export", parents=parents, help="write a corpus entry as a document")
    export.add_argument("id")
    export.add_argument("-o", "--output", help="write here instead of stdout")
    export.set_defaults(handler=run_export)

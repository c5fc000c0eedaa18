"""
Law reports.

Every checker (validators for carriers, monoid-law checkers for operads,
monads and algebrads, module and algebra checks) fills one of these instead of
raising. A report counts instances per law, keeps the first few witnesses of
each failing law (how many is a config knob) and collects notices about
anything that was not checked exhaustively.

law_instances is the one place that decides whether a law cell gets
enumerated in full or sampled: under the configured budget everything is
enumerated in lexicographic order, so the first witness is also the least
one; over budget we draw a seeded numpy sample and say so in a notice.
"""

import itertools
import logging
from dataclasses import dataclass, field
from math import prod
from typing import Any, Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config.calculus_config import CalculusConfig, ConfigurationManager

logger = logging.getLogger(__name__)


@dataclass
class Violation:
    law: str
    witness: Dict[str, Any]
    message: str


@dataclass
class LawReport:
    subject: str
    laws_checked: List[str] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)
    notices: List[str] = field(default_factory=list)
    instances: Dict[str, int] = field(default_factory=dict)
    failures: Dict[str, int] = field(default_factory=dict)
    max_witnesses: int = 5

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failed_laws(self) -> Set[str]:
        return set(self.failures)

    def law(self, name: str) -> None:
        if name not in self.laws_checked:
            self.laws_checked.append(name)
            self.instances.setdefault(name, 0)

    def count(self, name: str, amount: int = 1) -> None:
        self.law(name)
        self.instances[name] += amount

    def record(self, law: str, witness: Dict[str, Any], message: str) -> None:
        self.law(law)
        self.failures[law] = self.failures.get(law, 0) + 1
        if self.failures[law] <= self.max_witnesses:
            self.violations.append(Violation(law, witness, message))

    def notice(self, text: str) -> None:
        if text not in self.notices:
            logger.warning(f"{self.subject}: {text}")
            self.notices.append(text)

    def first_witness(self, law: str) -> Optional[Dict[str, Any]]:
        for violation in self.violations:
            if violation.law == law:
                return violation.witness
        return None

    def merge(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for name in other.laws_checked:
            self.law(prefix + name)
            self.instances[prefix + name] += other.instances.get(name, 0)
        for name, failures in other.failures.items():
            self.failures[prefix + name] = self.failures.get(prefix + name, 0) + failures
        for violation in other.violations:
            self.violations.append(Violation(prefix + violation.law, violation.witness, violation.message))
        for text in other.notices:
            self.notice(text)
        return self

    def summary(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "laws": {name: {"instances": self.instances.get(name, 0), "failures": self.failures.get(name, 0)}
                     for name in self.laws_checked},
        }


def new_report(subject: str, config: Optional[CalculusConfig] = None) -> LawReport:
    config = config or ConfigurationManager.active()
    return LawReport(subject=subject, max_witnesses=config.max_witnesses)


def law_instances(report: LawReport, law: str, ranges: Sequence[Sequence[Any]], cell: str = "",
                  config: Optional[CalculusConfig] = None) -> Iterator[Tuple[Any, ...]]:
    """Every tuple of the product of `ranges`, or a seeded sample when over budget"""
    config = config or ConfigurationManager.active()
    report.law(law)
    total = prod(len(r) for r in ranges)
    budget = config.law_instance_budget
    if budget is None or total <= budget:
        report.count(law, total)
        yield from itertools.product(*ranges)
        return

    report.notice(f"{law}{' ' + cell if cell else ''}: {total} instances, checked a sample of {budget}")
    report.count(law, budget)
    rng = np.random.default_rng(config.sample_seed)
    sizes = np.array([len(r) for r in ranges], dtype=np.int64)
    draws = rng.integers(0, sizes, size=(budget, len(ranges)))
    for row in draws:
        yield tuple(r[int(i)] for r, i in zip(ranges, row))

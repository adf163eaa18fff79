"""Certificate documents and the recorder used while replaying a proof."""

import json
import logging
from contextlib import contextmanager
from typing import Dict, Iterator, List, Literal, Optional, Tuple, Type

from pydantic import BaseModel, ConfigDict, Field

from chordcert.curve import CurvePoint
from chordcert.errors import CertificationError, ChainCheckFailed, DepthExceeded
from chordcert.ten_points import MIRRORED, TenPoints

logger = logging.getLogger(__name__)

PathName = Literal["obvious", "prop1", "reduction"]

MAX_DEPTH = 5


class Check(BaseModel):
    """One verified assertion together with the values that witness it."""
    model_config = ConfigDict(populate_by_name=True)

    name: str
    claim: str
    witnesses: Dict[str, str] = Field(default_factory=dict)
    passed: bool = Field(alias="pass")


class Certificate(BaseModel):
    """A node of the certificate tree for one triple."""
    field: str
    curve: str
    triple: List[str]
    path: PathName
    case_or_lemma: str
    checks: List[Check] = Field(default_factory=list)
    swap_pr: bool = False
    children: List["Certificate"] = Field(default_factory=list)
    verdict: bool

    def all_checks_pass(self) -> bool:
        own = all(c.passed for c in self.checks)
        return own and all(ch.all_checks_pass() for ch in self.children)

    def depth(self) -> int:
        return 1 + max((ch.depth() for ch in self.children), default=0)

    def paths(self) -> List[str]:
        """Labels of this node and its descendants, depth first."""
        label = f"{self.path}:{self.case_or_lemma}"
        return [label] + [p for ch in self.children for p in ch.paths()]

    def exercised_patterns(self) -> List[str]:
        """Patterns established by a passing check in some reduction node of this tree.

        Checks on a node with ``swap_pr`` set are renamed back to the orientation of
        the triple that node was asked about.
        """
        found = set()
        if self.path == "reduction":
            for check in self.checks:
                if check.passed and check.name.startswith("pattern_"):
                    name = check.name[len("pattern_"):]
                    found.add(MIRRORED[name] if self.swap_pr else name)
        for child in self.children:
            found.update(child.exercised_patterns())
        return sorted(found)


Certificate.model_rebuild()


def canonical_json(model: BaseModel) -> str:
    """Stable serialization: sorted keys, two-space indent, trailing newline."""
    data = model.model_dump(mode="json", by_alias=True)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_text(cert: Certificate, indent: int = 0) -> str:
    pad = "  " * indent
    swap = " [P<->R]" if cert.swap_pr else ""
    verdict = "✓" if cert.verdict else "✗"
    lines = [f"{pad}{verdict} {cert.path} {cert.case_or_lemma}{swap}: ({', '.join(cert.triple)})"]
    for check in cert.checks:
        mark = "✓" if check.passed else "✗"
        lines.append(f"{pad}  {mark} {check.name}: {check.claim}")
    for child in cert.children:
        lines.append(render_text(child, indent + 1))
    return "\n".join(lines)


class NodeBuilder:
    """Collects checks for one certificate node.

    ``tp`` is the orientation the checks are phrased in; with ``swap_pr`` the
    recorded triple is the unswapped one.
    """

    def __init__(self, tp: TenPoints, path: PathName, case_or_lemma: str, swap_pr: bool = False,
                 error: Type[CertificationError] = ChainCheckFailed):
        self.tp = tp
        self.path = path
        self.case_or_lemma = case_or_lemma
        self.swap_pr = swap_pr
        self.error = error
        self.checks: List[Check] = []
        self.children: List[Certificate] = []

    def equal(self, name: str, claim: str,
              left: Tuple[str, CurvePoint], right: Tuple[str, CurvePoint],
              error: Optional[Type[CertificationError]] = None) -> None:
        witnesses = {left[0]: str(left[1]), right[0]: str(right[1])}
        self.record(name, claim, left[1] == right[1], witnesses, error)

    def differ(self, name: str, claim: str,
               left: Tuple[str, CurvePoint], right: Tuple[str, CurvePoint],
               error: Optional[Type[CertificationError]] = None) -> None:
        witnesses = {left[0]: str(left[1]), right[0]: str(right[1])}
        self.record(name, claim, left[1] != right[1], witnesses, error)

    def record(self, name: str, claim: str, passed: bool,
               witnesses: Optional[Dict[str, str]] = None,
               error: Optional[Type[CertificationError]] = None,
               dump: Optional[str] = None) -> None:
        """Append a check; a failed check raises ``error`` (default: the node's error type)."""
        check = Check(name=name, claim=claim, witnesses=witnesses or {}, passed=passed)
        self.checks.append(check)
        if not passed:
            logger.error(f"Check {name} failed: {claim} {check.witnesses}")
            exc_type = error or self.error
            raise exc_type(
                f"{self.path} {self.case_or_lemma}: {claim} does not hold ({check.witnesses})",
                matrix_dump=dump,
            )

    def attach(self, child: Certificate) -> None:
        self.children.append(child)

    def original_triple(self) -> List[str]:
        p, q, r = self.tp.triple()
        if self.swap_pr:
            p, r = r, p
        return [str(p), str(q), str(r)]

    def finish(self, verdict: bool) -> Certificate:
        curve = self.tp.curve
        return Certificate(
            field=str(curve.field),
            curve=curve.spec(),
            triple=self.original_triple(),
            path=self.path,
            case_or_lemma=self.case_or_lemma,
            checks=list(self.checks),
            swap_pr=self.swap_pr,
            children=list(self.children),
            verdict=verdict,
        )

    def conclude(self) -> Certificate:
        """Record the final P9 = P10 check and build the node."""
        self.equal("conclusion", "P9 = P10", ("P9", self.tp[9]), ("P10", self.tp[10]))
        return self.finish(True)

    @contextmanager
    def guard(self) -> Iterator["NodeBuilder"]:
        """Attach this node, as built so far, to a certification error that escapes.

        A partial tree already attached by a failing child becomes the last child.
        """
        try:
            yield self
        except CertificationError as exc:
            node = self.finish(False)
            if exc.partial is not None:
                node.children.append(exc.partial)
            exc.partial = node
            raise


def check_depth(depth: int, label: str) -> None:
    if depth > MAX_DEPTH:
        logger.error(f"Certificate depth {depth} exceeds {MAX_DEPTH} at {label}")
        raise DepthExceeded(f"Nesting {label} at depth {depth} exceeds the limit of {MAX_DEPTH}")

"""Building certificates out of pairs of composites."""

import logging
from typing import Iterable, Optional

from .errors import InvariantError
from .matrix import Matrix, vstack
from .models import CertReport, DiagramVerdict, Witness

logger = logging.getLogger(__name__)


def compare_composites(diagram: str, left: Matrix, right: Matrix) -> DiagramVerdict:
    """PASS if the two composites of ``diagram`` agree, else FAIL with a witness.

    The witness is the first basis vector of the common source on which the
    composites differ, together with both images.
    """
    if left.shape != right.shape:
        raise InvariantError(
            f"{diagram}: composites have shapes {left.shape} and {right.shape}",
            details={"diagram": diagram},
        )
    index: Optional[int] = left.first_difference(right)
    if index is None:
        return DiagramVerdict(diagram, True)
    logger.debug(f"{diagram} fails on basis vector {index}")
    return DiagramVerdict(diagram, False, Witness(index, left.column(index), right.column(index)))


def compare_stacked(diagram: str, lefts: Iterable[Matrix], rights: Iterable[Matrix]) -> DiagramVerdict:
    """Compare several composite pairs with a common source as one diagram."""
    return compare_composites(diagram, vstack(list(lefts)), vstack(list(rights)))


def certificate(subject: str, *verdicts: DiagramVerdict) -> CertReport:
    report = CertReport(subject, tuple(verdicts))
    if not report.passed:
        logger.debug(f"{subject}: FAIL on {[v.diagram for v in report.failures]}")
    return report

"""Fuzzy resolution of structure kinds and builder names."""

import logging
from typing import Callable, Iterable, List, Optional, Sequence

from rapidfuzz import fuzz

from .models import ResolutionMatch

logger = logging.getLogger(__name__)


def _normalize(name: str) -> str:
    return name.strip().lower().replace("-", "_").replace(" ", "_")


class NameResolver:
    """Resolves user-provided names (``comodle``, ``Divided-Power``) to known ones.

    Exact matches win after normalizing case, dashes and spaces; otherwise the
    candidates scoring above ``threshold`` are offered as suggestions.

    Attributes:
        candidates: The known names
        threshold: Minimum match score (0-100) for a suggestion
    """

    def __init__(self, candidates: Sequence[str], threshold: int = 70):
        self.candidates = tuple(candidates)
        self.threshold = threshold

    def _fuzzy_match(
        self,
        query: str,
        candidates: Iterable[str],
        key_func: Callable[[str], str] = _normalize,
        threshold: Optional[int] = None,
    ) -> List[ResolutionMatch]:
        """Candidates scoring at least ``threshold``, best first (ties keep candidate order)."""
        threshold = self.threshold if threshold is None else threshold
        if not query:
            return []
        key = key_func(query).replace("_", " ")
        matches = []
        for order, candidate in enumerate(candidates):
            score = fuzz.token_sort_ratio(key, key_func(candidate).replace("_", " "))
            if score >= threshold:
                matches.append((-score, order, candidate))
        matches.sort()
        results = [ResolutionMatch(name=name, match_score=float(-score)) for score, _, name in matches]
        logger.debug(f"Fuzzy match for '{query}': {len(results)} matches above threshold {threshold}")
        return results

    def exact(self, query: str) -> Optional[str]:
        wanted = _normalize(query)
        return next((c for c in self.candidates if _normalize(c) == wanted), None)

    def suggestions(self, query: str) -> List[str]:
        return [m.name for m in self._fuzzy_match(query, self.candidates)]

    def resolve(self, query: str) -> List[ResolutionMatch]:
        """The exact match alone (score 100), or the fuzzy matches."""
        found = self.exact(query)
        if found is not None:
            return [ResolutionMatch(name=found, match_score=100.0)]
        return self._fuzzy_match(query, self.candidates)

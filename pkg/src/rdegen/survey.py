"""Survey driver: sweep (ell, v <= w) tuples, cross-check the classifier and run the oracle."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .combinatorics import KSubset, parse_subset, richardson_pairs
from .errors import CapabilityError, ParameterError
from .ideal_core import classify_richardson, is_monomial_free
from .oracle import verify_theorem_main

SKIPPED = "skipped"

# column order shared by the JSON and CSV writers
FIELDS = ("k", "n", "ell", "v", "w", "classifier", "class_test", "witness", "toric_equal", "quad_gen")


@dataclass
class SurveyRecord:
    k: int
    n: int
    ell: int
    v: str
    w: str
    classifier: bool
    class_test: bool
    witness: str | None = None
    toric_equal: dict | str = SKIPPED
    quad_gen: bool | str = SKIPPED
    runtime_ms: int = field(default=0, compare=False)

    @property
    def classifier_mismatch(self) -> bool:
        return self.classifier != self.class_test

    @property
    def toric_failure(self) -> bool:
        """Equality or quadratic generation failed although the restricted ideal is monomial-free."""
        if not self.class_test or self.toric_equal == SKIPPED:
            return False
        return not all(self.toric_equal.values()) or self.quad_gen is False

    @property
    def falsified(self) -> bool:
        return self.classifier_mismatch or self.toric_failure

    def data(self) -> dict:
        """Deterministic payload; runtime is deliberately left out."""
        te = self.toric_equal
        if isinstance(te, dict):
            te = {str(d): te[d] for d in sorted(te)}
        return {
            "k": self.k,
            "n": self.n,
            "ell": self.ell,
            "v": self.v,
            "w": self.w,
            "classifier": self.classifier,
            "class_test": self.class_test,
            "witness": self.witness,
            "toric_equal": te,
            "quad_gen": self.quad_gen,
        }

    def timing(self) -> dict:
        return {"ell": self.ell, "v": self.v, "w": self.w, "runtime_ms": self.runtime_ms}

    def describe(self) -> str:
        parts = []
        if self.classifier_mismatch:
            parts.append(
                f"classifier={self.classifier} but class_test={self.class_test}"
                + (f" (witness {self.witness})" if self.witness else "")
            )
        if self.toric_failure:
            parts.append(f"toric_equal={self.data()['toric_equal']} quad_gen={self.quad_gen}")
        return f"k={self.k} n={self.n} ell={self.ell} v={self.v} w={self.w}: " + "; ".join(parts)


Classifier = Callable[[KSubset, KSubset, int, int, int], bool]


def evaluate(k: int, n: int, ell: int, v: KSubset, w: KSubset, verify: bool, degree: int,
             classifier: Classifier | None = None, allow_deg4: bool = False) -> SurveyRecord:
    t0 = time.perf_counter()
    classifier = classifier or classify_richardson
    mf = is_monomial_free(k, n, ell, v, w)
    rec = SurveyRecord(
        k, n, ell, str(v), str(w),
        classifier=bool(classifier(v, w, k, n, ell)),
        class_test=mf.free,
        witness=mf.witness.label() if mf.witness else None,
    )
    if verify:
        try:
            rep = verify_theorem_main(v, w, ell, degree, allow_deg4=allow_deg4)
        except CapabilityError:
            pass
        else:
            rec.toric_equal = {d: r.equal for d, r in rep.degrees.items()}
            rec.quad_gen = rep.quad_gen if rep.quad_gen is not None else SKIPPED
    rec.runtime_ms = int(round((time.perf_counter() - t0) * 1000))
    return rec


def survey_tasks(k: int, n: int, ells: Iterable[int]) -> list[tuple[int, KSubset, KSubset]]:
    """Canonical order: ell, then v lexicographically, then w lexicographically."""
    pairs = list(richardson_pairs(k, n))
    return [(ell, v, w) for ell in ells for v, w in pairs]


def _work(args):
    k, n, ell, v, w, verify, degree, allow_deg4 = args
    return evaluate(k, n, ell, v, w, verify, degree, allow_deg4=allow_deg4)


def iter_survey(k: int, n: int, ells: Sequence[int], degree: int = 3, verify: bool = False,
                jobs: int = 1, classifier: Classifier | None = None,
                allow_deg4: bool = False) -> Iterator[SurveyRecord]:
    """Yield records in canonical order whatever the completion order of the workers.

    A custom ``classifier`` forces serial evaluation (it may not be picklable).
    """
    if k < 1 or k > n:
        raise ParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    for ell in ells:
        if not 0 <= ell <= n:
            raise ParameterError(f"ell must lie in 0..{n}, got {ell}")
    tasks = survey_tasks(k, n, ells)
    if jobs <= 1 or classifier is not None:
        for ell, v, w in tasks:
            yield evaluate(k, n, ell, v, w, verify, degree, classifier, allow_deg4)
        return
    args = [(k, n, ell, v, w, verify, degree, allow_deg4) for ell, v, w in tasks]
    chunk = max(1, len(args) // (jobs * 8))
    ex = ProcessPoolExecutor(max_workers=jobs)
    try:
        yield from ex.map(_work, args, chunksize=chunk)
    finally:
        ex.shutdown(wait=True, cancel_futures=True)


def run_survey(k: int, n: int, ell_range: Iterable[int], degree_bound: int = 3, verify: bool = False,
               jobs: int = 1, classifier: Classifier | None = None) -> list[SurveyRecord]:
    return list(iter_survey(k, n, list(ell_range), degree_bound, verify, jobs, classifier))


@dataclass
class SurveySummary:
    records: int = 0
    monomial_free: int = 0
    classifier_true: int = 0
    mismatches: int = 0
    verified: int = 0
    toric_equal: int = 0
    quad_gen: int = 0

    def add(self, rec: SurveyRecord) -> None:
        self.records += 1
        self.monomial_free += rec.class_test
        self.classifier_true += rec.classifier
        self.mismatches += rec.classifier_mismatch
        if rec.toric_equal != SKIPPED:
            self.verified += 1
            self.toric_equal += all(rec.toric_equal.values())
            self.quad_gen += rec.quad_gen is True

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def parse_ell_range(text: str | None, n: int) -> list[int]:
    """``None`` means 0..n; otherwise comma-separated values or a-b ranges, possibly empty."""
    if text is None:
        return list(range(n + 1))
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParameterError(f"cannot read ell range {text!r}") from None
    for ell in out:
        if not 0 <= ell <= n:
            raise ParameterError(f"ell must lie in 0..{n}, got {ell}")
    return sorted(set(out))


def parse_pair(v: str, w: str, k: int, n: int) -> tuple[KSubset, KSubset]:
    return parse_subset(v, n, k), parse_subset(w, n, k)

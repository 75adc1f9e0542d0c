"""The randomized invariant suites behind ``coalgebra-workbench selftest``.

Suites run in a fixed order; suite ``k`` draws from ``make_rng(seed, k)`` and
instance ``i`` works over Q when ``i`` is even and over GF(5) otherwise, so
the report depends on nothing but the seed and the count.
"""

import logging
import time
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .coalgebra import Coalgebra
from .cohom import adjunction_check, mixed_hom, mixed_hom_via_modules
from .comodules import (
    Comodule,
    check_comodule,
    check_contramodule,
    direct_sum_comodules,
    hom_comodules,
    hom_contramodules,
)
from .config import WorkbenchConfig
from .conventions import psi, psi_bar, unvec, vec
from .cotensor import (
    cotensor,
    direct_sum_right_comodules,
    regular_right_comodule,
    right_comodule_to_module,
    tensor_over_algebra,
)
from .duality import (
    comodule_to_contramodule,
    comodule_to_pcmodule,
    composite_right_vertical,
    contramodule_to_comodule,
    contramodule_to_dmodule,
    dmodule_to_contramodule,
    dmodule_to_pcmodule,
    pcmodule_to_comodule,
    pcmodule_to_dmodule,
    proof_diagram_oracles,
    psi_naturality_report,
)
from .errors import WorkbenchError
from .field import GF, QQ, FieldSpec
from .generators import (
    PRNG_NAME,
    build_coalgebra,
    make_rng,
    mutate,
    random_bicomodule,
    random_comodule,
    random_matrix,
    random_right_comodule,
    random_tower,
)
from .linalg import rank
from .matrix import Matrix, dual_map
from .models import CertReport, DiagramVerdict, Report
from .modules import (
    check_theta_module,
    hom_right_modules,
    hom_theta_modules,
    right_module_to_theta,
    theta_to_right_module,
)
from .serialization import check_structure
from .towers import check_tower, limit_cone

logger = logging.getLogger(__name__)

SELFTEST_FIELDS: Tuple[FieldSpec, ...] = (QQ, GF(5))

DUALITY_BASES = (
    "grouplike:1",
    "grouplike:2",
    "grouplike:3",
    "matrix_coalgebra:2",
    "divided_power:0",
    "divided_power:1",
    "divided_power:2",
    "divided_power:3",
    "trig",
)

ADJUNCTION_BASES = ("grouplike:1", "grouplike:2", "matrix_coalgebra:2", "divided_power:2")

MAX_REPORTED_FAILURES = 5

# Instances per suite for an acceptance run; object duality runs per base instead.
ACCEPTANCE_COUNTS: Dict[str, int] = {
    "psi_contract": 100,
    "morphism_duality": 200,
    "diagram_square": 200,
    "module_formulations": 100,
    "cotensor_duality": 100,
    "mixed_hom": 100,
    "towers": 50,
    "adjunction": 100,
    "negative": 100,
}

ACCEPTANCE_PER_BASE = 500

Check = Callable[[np.random.Generator, FieldSpec, int], List[DiagramVerdict]]


def _pick_base(rng: np.random.Generator, field: FieldSpec, bases: Sequence[str] = DUALITY_BASES) -> Coalgebra:
    return build_coalgebra(bases[int(rng.integers(0, len(bases)))], field)


def _same(name: str, passed: bool) -> DiagramVerdict:
    return DiagramVerdict(name, bool(passed))


def _relabel(prefix: str, report: CertReport) -> List[DiagramVerdict]:
    return [DiagramVerdict(f"{prefix}.{v.diagram}", v.passed, v.witness) for v in report.verdicts]


# ============================================================================
# Suites
# ============================================================================

def suite_psi_contract(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """ψ and ψ̄ against their elementwise formulas, plus naturality of ψ."""
    a, b, z = (int(rng.integers(0, 5)) for _ in range(3))
    gamma = random_matrix(rng, b * z, a, field)
    # ψ(γ) sends e_i⊗e_j to γ(e_i)(e_j): column j of the z×b map stored in column i of γ.
    expected = Matrix.from_function(
        z, a * b, lambda r, col: gamma[(col % b) * z + r, col // b], field
    )
    verdicts = [_same("psi_evaluation", psi(a, b, z, field) @ vec(gamma) == vec(expected))]

    d, n, m = (int(rng.integers(0, 4)) for _ in range(3))
    g = random_matrix(rng, m, d * n, field)
    # ψ̄(G)(e_r) = Σ_i G(e_i*⊗e_r)⊗e_i.
    bar = Matrix.from_function(m * d, n, lambda row, r: g[row // d, (row % d) * n + r], field)
    verdicts.append(_same("psi_bar_evaluation", psi_bar(d, n, m, field) @ vec(g) == vec(bar)))

    a2, b2, z2 = (int(rng.integers(0, 4)) for _ in range(3))
    report = psi_naturality_report(
        random_matrix(rng, a, a2, field), random_matrix(rng, b, b2, field), random_matrix(rng, z2, z, field)
    )
    return verdicts + list(report.verdicts)


def suite_object_duality(rng: np.random.Generator, field: FieldSpec, max_dim: int,
                          bases: Sequence[str] = DUALITY_BASES,
                          mutated: Optional[bool] = None) -> List[DiagramVerdict]:
    """check_comodule and check_contramodule agree diagram by diagram, on valid and mutated ρ.

    ``mutated`` forces the choice a coin flip makes otherwise; a zero-dimensional
    comodule has no entry to mutate and stays valid.
    """
    c = _pick_base(rng, field, bases)
    x = random_comodule(rng, c, max_dim)
    if mutated is None:
        mutated = bool(rng.random() < 0.5)
    if x.dim and mutated:
        x = mutate(rng, x, check_comodule)
    z = comodule_to_contramodule(x)
    verdicts = [
        _same("verdicts_agree", check_comodule(x).outcome() == check_contramodule(z).outcome()),
        _same("roundtrip", contramodule_to_comodule(z) == x),
    ]
    return verdicts + _relabel("oracle", proof_diagram_oracles(x))


def suite_morphism_duality(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """α is a comodule map exactly when α* is a contramodule map."""
    c = _pick_base(rng, field)
    x, y = random_comodule(rng, c, max_dim), random_comodule(rng, c, max_dim)
    if rng.random() < 0.5:
        y = direct_sum_comodules(x, y)
    comodule_maps = hom_comodules(x, y)
    contramodule_maps = hom_contramodules(comodule_to_contramodule(y), comodule_to_contramodule(x))
    dualized = all(
        contramodule_maps.contains(vec(dual_map(unvec(v, y.dim, x.dim, field))))
        for v in comodule_maps.vectors()
    )
    return [
        _same("hom_dimension", comodule_maps.dim == contramodule_maps.dim),
        _same("dual_basis_in_span", dualized),
    ]


def _square_verdicts(c: Coalgebra, x: Comodule) -> List[DiagramVerdict]:
    z = comodule_to_contramodule(x)
    left = comodule_to_pcmodule(x)
    right = contramodule_to_dmodule(z)
    return [
        _same("square_commutes", dmodule_to_contramodule(right, c) == composite_right_vertical(right, c)),
        _same("roundtrip.comodule", contramodule_to_comodule(z) == x),
        _same("roundtrip.contramodule", comodule_to_contramodule(contramodule_to_comodule(z)) == z),
        _same("roundtrip.simson", pcmodule_to_comodule(left, c) == x),
        _same("roundtrip.simson_inverse", comodule_to_pcmodule(pcmodule_to_comodule(left, c)) == left),
        _same("roundtrip.pontryagin", dmodule_to_pcmodule(pcmodule_to_dmodule(left)) == left),
        _same("roundtrip.pontryagin_inverse", pcmodule_to_dmodule(dmodule_to_pcmodule(right)) == right),
        _same("roundtrip.right_vertical", contramodule_to_dmodule(dmodule_to_contramodule(right, c)) == right),
        _same("roundtrip.right_vertical_inverse", dmodule_to_contramodule(contramodule_to_dmodule(z), c) == z),
    ]


def suite_diagram_square(rng: np.random.Generator, field: FieldSpec, max_dim: int,
                         bases: Sequence[str] = DUALITY_BASES) -> List[DiagramVerdict]:
    """The right vertical arrow against the other three, and all eight roundtrips, over every base."""
    verdicts = []
    for label in bases:
        c = build_coalgebra(label, field)
        square = _square_verdicts(c, random_comodule(rng, c, max_dim))
        verdicts.extend(DiagramVerdict(f"{label}.{v.diagram}", v.passed, v.witness) for v in square)
    return verdicts


def suite_module_formulations(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """Action and θ formulations of right C*-modules: roundtrip and equal hom dimensions."""
    c = _pick_base(rng, field)
    first = contramodule_to_dmodule(comodule_to_contramodule(random_comodule(rng, c, max_dim)))
    second = contramodule_to_dmodule(comodule_to_contramodule(random_comodule(rng, c, max_dim)))
    theta_first, theta_second = right_module_to_theta(first), right_module_to_theta(second)
    return _relabel("theta", check_theta_module(theta_first)) + [
        _same("roundtrip", theta_to_right_module(theta_first) == first),
        _same(
            "hom_dimension",
            hom_right_modules(first, second).dim == hom_theta_modules(theta_first, theta_second).dim,
        ),
    ]


def suite_cotensor_duality(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """dim L□M = dim L*⊗_{C*}M*, and C□M has the dimension of M."""
    c = _pick_base(rng, field)
    l, m = random_right_comodule(rng, c, max_dim), random_comodule(rng, c, max_dim)
    product = cotensor(l, m)
    quotient = tensor_over_algebra(right_comodule_to_module(l), comodule_to_pcmodule(m))
    return [
        _same("tensor_duality", product.dim == quotient.dim),
        _same("unit", cotensor(regular_right_comodule(c), m).dim == m.dim),
    ]


def suite_mixed_hom(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """The ψ̄ system against the D*-linearity description."""
    d = _pick_base(rng, field)
    n = comodule_to_contramodule(random_comodule(rng, d, max_dim))
    m = random_right_comodule(rng, d, max_dim)
    return [_same("module_maps", mixed_hom(n, m) == mixed_hom_via_modules(n, m))]


def suite_towers(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """The limit of a tower of surjections is certified and isomorphic to the top level."""
    c = _pick_base(rng, field)
    tower = random_tower(rng, c, int(rng.integers(1, 5)), max_dim)
    cone = limit_cone(tower)
    top = tower.levels[-1]
    to_top = cone.projections[-1]
    return _relabel("tower", check_tower(tower)) + _relabel("limit", check_contramodule(cone.contramodule)) + [
        _same("isomorphic_to_top", cone.contramodule.dim == top.dim and rank(to_top) == top.dim),
    ]


def suite_adjunction(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """Hom_D(N, L□_C M) ≅ Hom_C(h(M, N), L) with naturality in L and N."""
    cap = min(max_dim, 3)
    c = _pick_base(rng, field, ADJUNCTION_BASES)
    d = _pick_base(rng, field, ADJUNCTION_BASES)
    l = random_right_comodule(rng, c, cap)
    m = random_bicomodule(rng, c, d, cap)
    x = random_comodule(rng, d, cap)
    n = comodule_to_contramodule(x)

    l_extra = random_right_comodule(rng, c, 2)
    l2 = direct_sum_right_comodules(l, l_extra)
    beta = Matrix.from_function(l2.dim, l.dim, lambda r, col: 1 if r == col else 0, field)

    x_extra = random_comodule(rng, d, 2)
    n2 = comodule_to_contramodule(direct_sum_comodules(x, x_extra))
    phi = Matrix.from_function(x.dim, x.dim + x_extra.dim, lambda r, col: 1 if r == col else 0, field)

    report = adjunction_check(l, m, n, l_maps=[(l2, beta)], n_maps=[(n2, phi)])
    return list(report.verdicts)


def suite_negative(rng: np.random.Generator, field: FieldSpec, max_dim: int) -> List[DiagramVerdict]:
    """A single-entry mutation of a certified structure fails with a witness."""
    c = _pick_base(rng, field)
    candidates = [
        c,
        random_comodule(rng, c, max_dim),
        comodule_to_contramodule(random_comodule(rng, c, max_dim)),
        random_right_comodule(rng, c, max_dim),
    ]
    candidates = [s for s in candidates if s.dim]
    structure = candidates[int(rng.integers(0, len(candidates)))]
    before = check_structure(structure)
    failures = check_structure(mutate(rng, structure)).failures
    return [
        _same("certified_before", before.passed),
        _same("mutation_flagged", bool(failures)),
        _same("witness_present", all(v.witness is not None for v in failures)),
    ]


SUITES: Tuple[Tuple[str, Check], ...] = (
    ("psi_contract", suite_psi_contract),
    ("object_duality", suite_object_duality),
    ("morphism_duality", suite_morphism_duality),
    ("diagram_square", suite_diagram_square),
    ("module_formulations", suite_module_formulations),
    ("cotensor_duality", suite_cotensor_duality),
    ("mixed_hom", suite_mixed_hom),
    ("towers", suite_towers),
    ("adjunction", suite_adjunction),
    ("negative", suite_negative),
)


# ============================================================================
# Runner
# ============================================================================

def run_suite(name: str, check: Check, rng: np.random.Generator, count: int, max_dim: int) -> Dict:
    """Run ``count`` instances of one suite; errors count as failures."""
    checks = 0
    failures: List[Dict] = []
    failed_instances = 0
    for index in range(count):
        field = SELFTEST_FIELDS[index % len(SELFTEST_FIELDS)]
        try:
            verdicts = check(rng, field, max_dim)
        except WorkbenchError as exc:
            logger.warning(f"{name}[{index}] raised {exc.error_type}: {exc.message}")
            verdicts = [DiagramVerdict(f"error.{exc.error_type}", False)]
        checks += len(verdicts)
        bad = [v for v in verdicts if not v.passed]
        if bad:
            failed_instances += 1
            for v in bad:
                if len(failures) < MAX_REPORTED_FAILURES:
                    entry = {"instance": index, "field": field.label, **v.to_dict()}
                    failures.append(entry)
    result = {
        "suite": name,
        "verdict": "FAIL" if failed_instances else "PASS",
        "instances": count,
        "checks": checks,
        "failed_instances": failed_instances,
    }
    if failures:
        result["failures"] = failures
    return result


Plan = List[Tuple[str, Check, int]]


def _execute(report: Report, seed: int, plans: Sequence[Plan], max_dim: int, timing: bool) -> Report:
    """Run each suite's plan on its own stream; ``plans[k]`` belongs to ``SUITES[k]``."""
    for position, ((suite, _), plan) in enumerate(zip(SUITES, plans)):
        rng = make_rng(seed, position)
        started = time.perf_counter()
        for name, check, count in plan:
            logger.info(f"selftest suite {name}: {count} instances")
            result = run_suite(name, check, rng, count, max_dim)
            report.verdicts.append(result)
            report.dimensions[f"{name}.checks"] = result["checks"]
            if result["verdict"] == "FAIL":
                logger.warning(f"selftest suite {name} failed on {result['failed_instances']} instances")
        if timing:
            report.timing[suite] = time.perf_counter() - started
    return report


def _selftest_header(seed: int, max_dim: int, **extra) -> Dict:
    return {
        "seed": seed,
        "prng": PRNG_NAME,
        **extra,
        "fields": [f.label for f in SELFTEST_FIELDS],
        "max_dim": max_dim,
    }


def run_selftest(seed: int, count: int, config: Optional[WorkbenchConfig] = None,
                 timing: Optional[bool] = None) -> Report:
    """Run every suite with ``count`` instances each.

    Args:
        seed: Master seed
        count: Instances per suite
        config: Supplies ``max_dim`` and the timing default
        timing: Include wall-clock seconds per suite (breaks byte-identity)
    """
    config = config or WorkbenchConfig()
    timing = config.report_timing if timing is None else timing
    max_dim = min(config.max_dim, 4)
    report = Report(command="selftest", header=_selftest_header(seed, max_dim, count=count))
    return _execute(report, seed, [[(name, check, count)] for name, check in SUITES], max_dim, timing)


def acceptance_plans(per_base: int = ACCEPTANCE_PER_BASE,
                     counts: Optional[Dict[str, int]] = None) -> List[Plan]:
    """Object duality per base, half valid and half mutated; every other suite at its count."""
    counts = ACCEPTANCE_COUNTS if counts is None else counts
    plans: List[Plan] = []
    for name, check in SUITES:
        if name != "object_duality":
            plans.append([(name, check, counts[name])])
            continue
        plan = []
        for label in DUALITY_BASES:
            for mutated in (False, True):
                entry = f"{name}[{label}{', mutated' if mutated else ''}]"
                plan.append((entry, partial(check, bases=(label,), mutated=mutated), per_base // 2))
        plans.append(plan)
    return plans


def run_acceptance(seed: int, config: Optional[WorkbenchConfig] = None,
                   timing: Optional[bool] = None, per_base: int = ACCEPTANCE_PER_BASE,
                   counts: Optional[Dict[str, int]] = None) -> Report:
    """The suites at acceptance scale.

    Instances still alternate between Q and GF(5), so each base sees
    ``per_base / 4`` valid and as many mutated comodules over each field.
    """
    config = config or WorkbenchConfig()
    timing = config.report_timing if timing is None else timing
    max_dim = min(config.max_dim, 4)
    header = _selftest_header(seed, max_dim, mode="acceptance", per_base=per_base)
    report = Report(command="selftest", header=header)
    return _execute(report, seed, acceptance_plans(per_base, counts), max_dim, timing)

"""Command-line interface: check, dual, cotensor, cohom, adjoint, random and selftest.

Exit codes: 0 when every verdict is PASS, 1 when an axiom or adjunction
diagram fails, 2 on parse, structural and precondition errors.
"""

import functools
import logging
import sys
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import typer

from .coalgebra import Algebra, Coalgebra, dual_algebra, dual_coalgebra
from .cohom import adjunction_check, cohom_space
from .comodules import Comodule, Contramodule, check_comodule, check_contramodule, direct_sum_comodules
from .config import WorkbenchConfig
from .cotensor import (
    Bicomodule,
    RightComodule,
    check_right_comodule,
    cotensor,
    direct_sum_right_comodules,
    right_comodule_to_module,
    tensor_over_algebra,
)
from .duality import (
    comodule_to_contramodule,
    comodule_to_pcmodule,
    contramodule_to_comodule,
    dmodule_to_pcmodule,
    pcmodule_to_dmodule,
)
from .errors import ErrorReport, StructuralError, WorkbenchError, validate_choice
from .field import FieldSpec
from .generators import (
    PRNG_NAME,
    RANDOM_KINDS,
    build_coalgebra,
    builder_resolver,
    make_rng,
    mutate,
    random_structure,
)
from .matrix import Matrix
from .models import CertReport, DiagramVerdict, Report
from .modules import LeftModule, RightModule
from .selftest import run_selftest
from .serialization import (
    Structure,
    check_structure,
    dumps,
    emit,
    emit_document,
    kind_of,
    kind_resolver,
    parse_file,
)
from .towers import FiniteTower, tower_limit

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Exact-arithmetic workbench for coalgebras, comodules and contramodules.",
    add_completion=False,
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


@dataclass
class CliState:
    """Options shared by every command."""

    config: WorkbenchConfig
    seed: int
    out: Optional[Path] = None
    format: OutputFormat = OutputFormat.json
    timing: bool = False
    timings: Dict[str, float] = field(default_factory=dict)

    def timed(self, step: str, fn: Callable[[], Any]) -> Any:
        started = time.perf_counter()
        try:
            return fn()
        finally:
            if self.timing:
                self.timings[step] = self.timings.get(step, 0.0) + time.perf_counter() - started


@app.callback()
def main_options(
    ctx: typer.Context,
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="PRNG seed (default WORKBENCH_SEED)."),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the report or structure here instead of stdout."),
    output_format: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Report format."),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR."),
    timing: Optional[bool] = typer.Option(
        None, "--timing/--no-timing", help="Include wall-clock timings (reports are then not byte-stable)."
    ),
):
    """Load configuration, configure logging and stash the global options."""
    try:
        config = WorkbenchConfig.from_env()
        if log_level is not None:
            validate_choice(log_level.upper(), "--log-level", ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
            config.log_level = log_level.upper()
    except (ValueError, WorkbenchError) as exc:
        typer.echo(f"configuration error: {exc}", err=True)
        raise typer.Exit(code=2)

    logging.basicConfig(
        level=config.logging_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    kind_resolver.threshold = config.default_match_threshold
    builder_resolver.threshold = config.default_match_threshold

    ctx.obj = CliState(
        config=config,
        seed=config.seed if seed is None else seed,
        out=out,
        format=output_format,
        timing=config.report_timing if timing is None else timing,
    )


# ============================================================================
# Output
# ============================================================================

def _write(state: CliState, text: str) -> None:
    if state.out is not None:
        state.out.write_text(text, encoding="utf-8")
        logger.info(f"wrote {state.out}")
    else:
        typer.echo(text, nl=False)


def _render_entry(entry: Dict[str, Any], lines: List[str], indent: str) -> None:
    name = entry.get("diagram") or entry.get("suite") or entry.get("subject") or "adjunction"
    line = f"{indent}{entry.get('verdict', '?')} {name}"
    if "witness" in entry:
        line += f" (witness: basis vector {entry['witness']['basis_index']})"
    if "instances" in entry:
        line += f" ({entry['instances']} instances, {entry['checks']} checks)"
    lines.append(line)
    for child in entry.get("diagrams", []):
        _render_entry(child, lines, indent + "  ")
    for child in entry.get("failures", []):
        _render_entry({**child, "diagram": f"instance {child['instance']} ({child['field']}): {child['diagram']}"},
                      lines, indent + "  ")


def render_text(report: Report) -> str:
    """Human-readable form of a report."""
    lines = [f"{report.command}: {'PASS' if report.passed else 'FAIL'}"]
    for key in sorted(report.header):
        lines.append(f"  {key}: {report.header[key]}")
    if report.verdicts:
        lines.append("verdicts:")
        for entry in report.verdicts:
            _render_entry(entry, lines, "  ")
    if report.dimensions:
        lines.append("dimensions:")
        lines.extend(f"  {key}: {value}" for key, value in sorted(report.dimensions.items()))
    if report.timing:
        lines.append("timing (s):")
        lines.extend(f"  {key}: {value:.6f}" for key, value in sorted(report.timing.items()))
    return "\n".join(lines) + "\n"


def _finish(state: CliState, report: Report) -> None:
    """Write the report and exit 0 (all PASS) or 1."""
    report.timing.update(state.timings)
    _write(state, dumps(report.to_dict()) if state.format is OutputFormat.json else render_text(report))
    if not report.passed:
        failed = [v.get("diagram") or v.get("suite") or v.get("subject") for v in report.verdicts
                  if v.get("verdict") != "PASS"]
        logger.warning(f"{report.command}: FAIL ({', '.join(str(f) for f in failed)})")
        raise typer.Exit(code=1)
    raise typer.Exit(code=0)


def _fail(state: CliState, error: ErrorReport) -> None:
    if state.format is OutputFormat.json:
        text = dumps(error.to_dict())
    else:
        where = f" at {error.location}" if error.location else ""
        text = f"error ({error.error_type}){where}: {error.message}\n"
    _write(state, text)
    raise typer.Exit(code=error.exit_code)


def guarded(command: Callable) -> Callable:
    """Turn WorkbenchErrors raised by a command into an error report and exit code 2."""

    @functools.wraps(command)
    def wrapper(ctx: typer.Context, *args, **kwargs):
        try:
            return command(ctx, *args, **kwargs)
        except WorkbenchError as exc:
            logger.error(f"{command.__name__}: {exc.error_type}: {exc.message}")
            _fail(ctx.obj, exc.to_report())

    return wrapper


def _load(state: CliState, path: Path, *kinds: type) -> Structure:
    """Parse ``path`` and insist on one of ``kinds``."""
    structure = state.timed("parse", lambda: parse_file(path))
    if kinds and not isinstance(structure, kinds):
        expected = " or ".join(k.__name__ for k in kinds)
        raise StructuralError(
            f"{path} holds a {kind_of(structure)}, expected a {expected}",
            field=str(path),
            details={"kind": kind_of(structure)},
        )
    return structure


def _header(path_args: Dict[str, Path], structure: Structure) -> Dict[str, Any]:
    header: Dict[str, Any] = {name: str(path) for name, path in path_args.items()}
    header["field"] = structure.field.label
    return header


def _inputs_certified(report: Report, *certificates: CertReport) -> bool:
    for cert in certificates:
        report.add(cert)
    return all(cert.passed for cert in certificates)


# ============================================================================
# check / dual
# ============================================================================

@app.command()
@guarded
def check(ctx: typer.Context, path: Path = typer.Argument(..., help="Structure file to certify.")):
    """Run the certifier matching the structure's kind.

    Towers also report the dimension of their limit when they certify.
    """
    state: CliState = ctx.obj
    structure = _load(state, path)
    report = Report(command="check", header={**_header({"file": path}, structure), "kind": kind_of(structure)})
    cert = state.timed("certify", lambda: check_structure(structure))
    report.add(cert)
    if isinstance(structure, FiniteTower):
        report.dimensions["height"] = structure.height
        if cert.passed:
            report.dimensions["limit"] = state.timed("limit", lambda: tower_limit(structure)).dim
    else:
        report.dimensions["dim"] = structure.dim
    logger.info(f"check {path}: {'PASS' if cert.passed else 'FAIL'}")
    _finish(state, report)


def dualize(structure: Structure) -> Structure:
    """The matching duality functor.

    coalgebra <-> algebra, comodule <-> contramodule, left module <-> right
    module (Pontryagin) and right comodule -> right module.

    Raises:
        StructuralError: For bicomodules and towers
        PreconditionError: When dualizing an uncertified (co)algebra
    """
    if isinstance(structure, Coalgebra):
        return dual_algebra(structure)
    if isinstance(structure, Algebra):
        return dual_coalgebra(structure)
    if isinstance(structure, Comodule):
        return comodule_to_contramodule(structure)
    if isinstance(structure, Contramodule):
        return contramodule_to_comodule(structure)
    if isinstance(structure, LeftModule):
        return pcmodule_to_dmodule(structure)
    if isinstance(structure, RightModule):
        return dmodule_to_pcmodule(structure)
    if isinstance(structure, RightComodule):
        return right_comodule_to_module(structure)
    raise StructuralError(f"no duality functor applies to a {kind_of(structure)}", field="kind")


@app.command()
@guarded
def dual(ctx: typer.Context, path: Path = typer.Argument(..., help="Structure file to dualize.")):
    """Apply the matching duality functor and emit the result."""
    state: CliState = ctx.obj
    structure = _load(state, path)
    result = state.timed("dual", lambda: dualize(structure))
    logger.info(f"dual of a {kind_of(structure)} is a {kind_of(result)}")
    _write(state, emit_document(result))
    raise typer.Exit(code=0)


# ============================================================================
# cotensor / cohom / adjoint
# ============================================================================

@app.command("cotensor")
@guarded
def cotensor_command(
    ctx: typer.Context,
    l_path: Path = typer.Argument(..., metavar="L", help="Right C-comodule."),
    m_path: Path = typer.Argument(..., metavar="M", help="Left C-comodule or C-D-bicomodule."),
):
    """Compute L□_C M and compare its dimension with L*⊗_{C*}M*."""
    state: CliState = ctx.obj
    l = _load(state, l_path, RightComodule)
    m = _load(state, m_path, Comodule, Bicomodule)
    report = Report(command="cotensor", header=_header({"L": l_path, "M": m_path}, l))
    left = m.left if isinstance(m, Bicomodule) else m
    if _inputs_certified(report, check_right_comodule(l), check_structure(m)):
        product = state.timed("cotensor", lambda: cotensor(l, m))
        quotient = state.timed(
            "tensor", lambda: tensor_over_algebra(right_comodule_to_module(l), comodule_to_pcmodule(left))
        )
        report.dimensions.update(cotensor=product.dim, tensor_over_dual=quotient.dim)
        report.verdicts.append(DiagramVerdict("tensor_duality", product.dim == quotient.dim).to_dict())
        if product.induced is not None:
            report.add(check_right_comodule(product.induced))
    _finish(state, report)


@app.command("cohom")
@guarded
def cohom_command(
    ctx: typer.Context,
    m_path: Path = typer.Argument(..., metavar="M", help="C-D-bicomodule."),
    n_path: Path = typer.Argument(..., metavar="N", help="Right D-contramodule."),
    emit_path: Optional[Path] = typer.Option(None, "--emit", help="Write h(M, N) as a structure file."),
):
    """Compute h(M, N) = Hom_D(N, M)* with every intermediate certificate."""
    state: CliState = ctx.obj
    m = _load(state, m_path, Bicomodule)
    n = _load(state, n_path, Contramodule)
    report = Report(command="cohom", header=_header({"M": m_path, "N": n_path}, m))
    if _inputs_certified(report, check_structure(m), check_contramodule(n)):
        space = state.timed("cohom", lambda: cohom_space(m, n))
        report.dimensions.update(mixed_hom=space.hom_space.dim, cohom=space.dim)
        report.add(check_comodule(space.comodule))
        report.add(check_contramodule(space.contramodule))
        if emit_path is not None:
            emit_path.write_text(emit_document(space.contramodule), encoding="utf-8")
            logger.info(f"wrote h(M, N) to {emit_path}")
    _finish(state, report)


def naturality_test_maps(l: RightComodule, n: Contramodule):
    """Nontrivial maps to test naturality with: L -> L⊕L and (N*⊕N*)* -> N."""
    f = l.field
    l2 = direct_sum_right_comodules(l, l)
    beta = Matrix.from_function(l2.dim, l.dim, lambda r, c: 1 if r == c else 0, f)
    x = contramodule_to_comodule(n)
    n2 = comodule_to_contramodule(direct_sum_comodules(x, x))
    phi = Matrix.from_function(n.dim, n2.dim, lambda r, c: 1 if r == c else 0, f)
    return [(l2, beta)], [(n2, phi)]


@app.command()
@guarded
def adjoint(
    ctx: typer.Context,
    l_path: Path = typer.Argument(..., metavar="L", help="Right C-comodule."),
    m_path: Path = typer.Argument(..., metavar="M", help="C-D-bicomodule."),
    n_path: Path = typer.Argument(..., metavar="N", help="Right D-contramodule."),
):
    """Verify Hom_D(N, L□_C M) ≅ Hom_C(h(M, N), L) on one instance."""
    state: CliState = ctx.obj
    l = _load(state, l_path, RightComodule)
    m = _load(state, m_path, Bicomodule)
    n = _load(state, n_path, Contramodule)
    report = Report(command="adjoint", header=_header({"L": l_path, "M": m_path, "N": n_path}, l))
    if _inputs_certified(report, check_right_comodule(l), check_structure(m), check_contramodule(n)):
        l_maps, n_maps = naturality_test_maps(l, n)
        result = state.timed("adjunction", lambda: adjunction_check(l, m, n, l_maps, n_maps))
        if not result.passed:
            result.instance = {"L": emit(l), "M": emit(m), "N": emit(n)}
        report.add(result)
        report.dimensions.update(lhs=result.lhs_dim, rhs=result.rhs_dim)
    _finish(state, report)


# ============================================================================
# random / selftest
# ============================================================================

@app.command("random")
@guarded
def random_command(
    ctx: typer.Context,
    kind: str = typer.Argument(..., help=f"One of: {', '.join(RANDOM_KINDS)}."),
    base: str = typer.Option("grouplike:2", "--base", help="Base coalgebra, e.g. grouplike:2, trig."),
    right_base: Optional[str] = typer.Option(None, "--right-base", help="Right coalgebra D for bicomodules."),
    dim: Optional[int] = typer.Option(None, "--dim", min=0, help="Maximum carrier dimension."),
    field_label: Optional[str] = typer.Option(None, "--field", help="Q or GF(p)."),
    height: int = typer.Option(2, "--height", min=0, help="Tower height."),
    mutated: bool = typer.Option(False, "--mutate", help="Flip one entry so that the certifier fails."),
):
    """Emit a seeded random structure (certified unless --mutate)."""
    state: CliState = ctx.obj
    resolved = kind_resolver.exact(kind)
    if resolved is None or resolved not in RANDOM_KINDS:
        suggestions = kind_resolver.suggestions(kind)
        raise StructuralError(
            f"unknown kind {kind!r}" + (f"; did you mean {', '.join(suggestions)}?" if suggestions else ""),
            field="kind",
            details={"suggestions": suggestions},
        )
    f = FieldSpec.from_label(field_label) if field_label else state.config.field
    c = build_coalgebra(base, f)
    d = build_coalgebra(right_base, f) if right_base else None
    rng = make_rng(state.seed)
    structure = random_structure(rng, resolved, c, d, state.config.max_dim if dim is None else dim, height)
    if mutated:
        structure = mutate(rng, structure)
    logger.info(f"random {resolved} over {c} ({PRNG_NAME}, seed {state.seed})")
    _write(state, emit_document(structure))
    raise typer.Exit(code=0)


@app.command()
@guarded
def selftest(
    ctx: typer.Context,
    count: Optional[int] = typer.Option(None, "--count", min=1, help="Instances per suite."),
):
    """Run every randomized invariant suite."""
    state: CliState = ctx.obj
    count = state.config.selftest_count if count is None else count
    report = run_selftest(state.seed, count, state.config, timing=state.timing)
    _finish(state, report)

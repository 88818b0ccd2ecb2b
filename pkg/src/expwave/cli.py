"""Command-line front end.

Subcommands:

  classify   family (and case + elliptic data when c1/frame are given)
  solve      JSON descriptor of a constructed solution
  sample     CSV of xi, h, psi, ode_residual over a grid
  verify     run the oracle battery, JSON array of reports
  figures    plot-ready CSVs for the seven catalogued figure families

Every numeric flag can instead come from a JSON config file passed with
--config whose keys mirror the JobConfig field names exactly (command-line
flags override file values).  Exit codes: 0 pass, 1 verification failure,
2 config error, 3 domain/singularity error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import tempfile

from .errors import ExpwaveError, InvalidParamsError
from .reduction import (
    CUBIC_FAMILIES,
    CaseLabel,
    EquationParams,
    FamilyLabel,
    FrameParams,
    classify_case,
    classify_family,
    elliptic_data,
    family_params,
    first_integral,
)
from .solutions import Solution, construct, implicit_relation
from .verify import (
    DEFAULT_FI_TOL,
    DEFAULT_IMPLICIT_TOL,
    DEFAULT_ODE_TOL,
    DEFAULT_PDE_TOL,
    DEFAULT_SHOOT_TOL,
    Grid,
    first_integral_residual,
    implicit_residual_check,
    ode_residual,
    pde_residual,
    shoot_and_compare,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


class ConfigError(Exception):
    pass


@dataclasses.dataclass
class JobConfig:
    """Flat job description; JSON config files use these exact field names."""

    command: str = ""
    family: str | None = None
    alpha: float | None = None
    beta: float | None = None
    a: float | None = None
    b: float | None = None
    c1: float | None = None
    lam: float | None = None
    k: float | None = None
    omega: float | None = None
    lambda_gamma: float | None = None
    xi0: float = 0.0
    branch: int = 1
    case: str | None = None
    xi_min: float = -10.0
    xi_max: float = 10.0
    n: int = 1001
    output: str | None = None
    tol_ode: float = DEFAULT_ODE_TOL
    tol_first_integral: float = DEFAULT_FI_TOL
    tol_shoot: float = DEFAULT_SHOOT_TOL
    tol_pde: float = DEFAULT_PDE_TOL
    tol_implicit: float = DEFAULT_IMPLICIT_TOL


_FIELDS = {f.name for f in dataclasses.fields(JobConfig)}


def _fmt(x: float) -> str:
    # fixed 17-significant-digit formatting keeps CSV byte-reproducible
    return format(x, ".17g")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _atomic_write(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-expwave-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, output: str | None):
    if output:
        _atomic_write(output, text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="expwave",
        description="Traveling-wave solutions of exponential-nonlinearity "
                    "wave equations: classify, construct, sample, verify.")
    top.add_argument("--config", help="JSON file mirroring JobConfig fields")
    sub = top.add_subparsers(dest="command")

    def add_common(p, grid=False):
        p.add_argument("--config", help="JSON file mirroring JobConfig fields")
        p.add_argument("--family", help="family name, e.g. tzitzeica, sine-gordon")
        p.add_argument("--alpha", type=float)
        p.add_argument("--beta", type=float)
        p.add_argument("--a", type=float)
        p.add_argument("--b", type=float)
        p.add_argument("--c1", type=float)
        p.add_argument("--lambda", dest="lam", type=float,
                       help="characteristic slope (JobConfig field: lam)")
        p.add_argument("--k", type=float)
        p.add_argument("--omega", type=float)
        p.add_argument("--lambda-gamma", dest="lambda_gamma", type=float,
                       help="shortcut: sets lam=value, k=0, omega=1")
        p.add_argument("--xi0", type=float)
        p.add_argument("--branch", type=int, choices=(1, -1))
        p.add_argument("--case", help="case label override")
        p.add_argument("--output", "-o")
        if grid:
            p.add_argument("--xi-min", dest="xi_min", type=float)
            p.add_argument("--xi-max", dest="xi_max", type=float)
            p.add_argument("--n", type=int)

    add_common(sub.add_parser("classify", help="identify family and case"))
    add_common(sub.add_parser("solve", help="emit a solution descriptor"))
    add_common(sub.add_parser("sample", help="CSV of xi,h,psi,ode_residual"),
               grid=True)
    p = sub.add_parser("verify", help="run the verification oracles")
    add_common(p, grid=True)
    p.add_argument("--tol-ode", dest="tol_ode", type=float)
    p.add_argument("--tol-first-integral", dest="tol_first_integral", type=float)
    p.add_argument("--tol-shoot", dest="tol_shoot", type=float)
    p.add_argument("--tol-pde", dest="tol_pde", type=float)
    p.add_argument("--tol-implicit", dest="tol_implicit", type=float)
    p = sub.add_parser("figures", help="write the figure-family CSVs")
    p.add_argument("--config", help="JSON file mirroring JobConfig fields")
    p.add_argument("--output", "-o", help="output directory (default ./figures)")
    p.add_argument("--n", type=int)
    return top


def _load_config(ns: argparse.Namespace) -> JobConfig:
    cfg = JobConfig()
    path = getattr(ns, "config", None)
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(data) - _FIELDS
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        for key, val in data.items():
            setattr(cfg, key, val)
    for key in _FIELDS:
        val = getattr(ns, key, None)
        if val is not None and key != "command":
            setattr(cfg, key, val)
    command = getattr(ns, "command", None) or cfg.command
    if not command:
        raise ConfigError("no command given (subcommand or config 'command')")
    if cfg.command and getattr(ns, "command", None) and cfg.command != ns.command:
        raise ConfigError(
            f"config requests {cfg.command!r} but command line says {ns.command!r}")
    cfg.command = command
    return cfg


def _resolve_family(cfg: JobConfig) -> tuple[FamilyLabel, EquationParams]:
    raw = [cfg.alpha, cfg.beta, cfg.a, cfg.b]
    has_raw = any(v is not None for v in raw)
    if cfg.family and has_raw:
        raise ConfigError("give either --family or raw alpha/beta/a/b, not both")
    if cfg.family:
        try:
            fam = FamilyLabel.parse(cfg.family)
        except InvalidParamsError as e:
            raise ConfigError(str(e))
        if fam is FamilyLabel.GenericTwoExponential:
            raise ConfigError("generic family needs raw alpha/beta/a/b")
        return fam, family_params(fam)
    if not has_raw:
        raise ConfigError("need --family or all of --alpha --beta --a --b")
    if any(v is None for v in raw):
        raise ConfigError("raw parameters need all of alpha, beta, a, b")
    try:
        params = EquationParams(cfg.alpha, cfg.beta, cfg.a, cfg.b)
    except InvalidParamsError as e:
        raise ConfigError(str(e))
    return classify_family(params), params


def _resolve_frame(cfg: JobConfig, required: bool = True) -> FrameParams | None:
    if cfg.lambda_gamma is not None:
        if cfg.lam is not None or cfg.k is not None or cfg.omega is not None:
            raise ConfigError("--lambda-gamma replaces lambda/k/omega")
        return FrameParams.from_lambda_gamma(cfg.lambda_gamma, xi0=cfg.xi0)
    if cfg.lam is not None:
        return FrameParams(lam=cfg.lam, k=cfg.k or 0.0,
                           omega=1.0 if cfg.omega is None else cfg.omega,
                           xi0=cfg.xi0)
    if required:
        raise ConfigError("need --lambda-gamma or --lambda [--k --omega]")
    return None


def _construct(cfg: JobConfig) -> Solution:
    fam, _ = _resolve_family(cfg)
    frame = _resolve_frame(cfg)
    if cfg.c1 is None:
        raise ConfigError("need --c1")
    case = None
    if cfg.case:
        try:
            case = CaseLabel.parse(cfg.case)
        except InvalidParamsError as e:
            raise ConfigError(str(e))
    return construct(fam, cfg.c1, frame, branch=cfg.branch, case=case)


def cmd_classify(cfg: JobConfig) -> int:
    fam, _ = _resolve_family(cfg)
    out: dict = {"family": fam.name}
    frame = _resolve_frame(cfg, required=False)
    if cfg.c1 is not None and frame is not None:
        if fam in CUBIC_FAMILIES or fam in (FamilyLabel.SineGordon,
                                            FamilyLabel.SinhGordon):
            out["case"] = classify_case(fam, frame, cfg.c1).name
        if fam in CUBIC_FAMILIES:
            out["elliptic_data"] = elliptic_data(fam, frame, cfg.c1).to_json()
    _emit(_json_dumps(out), cfg.output)
    return EXIT_OK


def cmd_solve(cfg: JobConfig) -> int:
    sol = _construct(cfg)
    _emit(_json_dumps(sol.descriptor()), cfg.output)
    return EXIT_OK


def _sample_rows(sol: Solution, points: list[float]) -> list[str]:
    from .reduction import traveling_ode
    from .verify import FD_BASE_STEP, _d1, _d2, _step_at
    ode = traveling_ode(family_params(sol.family), sol.frame)
    rows = ["xi,h,psi,ode_residual"]
    for xi in points:
        h = sol.evaluate_h(xi)
        psi = sol.evaluate_psi(xi)
        s = _step_at(xi, sol.singularities, FD_BASE_STEP)
        if sol.psi_native:
            d2 = _d2(sol.evaluate_psi, xi, s)
            rhs = ode.rhs_psi(psi)
            res = abs(d2 - rhs) / max(1.0, abs(rhs))
        else:
            d1 = _d1(sol.evaluate_h, xi, s)
            d2 = _d2(sol.evaluate_h, xi, s)
            fh = ode.f(h)
            res = abs(h * d2 - d1 * d1 - fh) / max(1.0, abs(fh))
        psi_txt = "" if (isinstance(psi, float) and math.isnan(psi)) else _fmt(psi)
        rows.append(f"{_fmt(xi)},{_fmt(h)},{psi_txt},{_fmt(res)}")
    return rows


def cmd_sample(cfg: JobConfig) -> int:
    sol = _construct(cfg)
    if cfg.n < 2:
        raise ConfigError("sample needs n >= 2")
    pad = sol.singularities.default_pad()
    excl = sol.singularities.exclusions(cfg.xi_min, cfg.xi_max, pad)
    step = (cfg.xi_max - cfg.xi_min) / (cfg.n - 1)
    points = []
    for i in range(cfg.n):
        x = cfg.xi_min + i * step
        if all(abs(x - c) > r for c, r in excl):
            points.append(x)
    rows = _sample_rows(sol, points)
    _emit("\n".join(rows) + "\n", cfg.output)
    return EXIT_OK


def cmd_verify(cfg: JobConfig) -> int:
    sol = _construct(cfg)
    frame = sol.frame
    grid = Grid.for_solution(sol, cfg.xi_min, cfg.xi_max, max(cfg.n, 16))
    reports = [
        ode_residual(sol, frame, grid, tol=cfg.tol_ode),
        first_integral_residual(sol, frame, sol.c1, grid,
                                tol=cfg.tol_first_integral),
    ]
    reports.append(_shoot_report(sol, cfg))
    try:
        reports.append(pde_residual(sol, frame, nz=80, nt=80, tol=cfg.tol_pde))
    except ExpwaveError:
        pass  # psi = log h not real on this frame; the xi-space oracles stand
    if abs(sol.c1) == 0.0 and sol.family in (FamilyLabel.Tzitzeica,
                                             FamilyLabel.DoddBullough,
                                             FamilyLabel.SinhGordon):
        rel = implicit_relation(sol.family, frame)
        g = _implicit_grid(sol, rel)
        if g is not None:
            reports.append(implicit_residual_check(rel, sol, g,
                                                   tol=cfg.tol_implicit))
    _emit(_json_dumps([r.to_json() for r in reports]), cfg.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAIL


def _shoot_report(sol: Solution, cfg: JobConfig):
    quad = first_integral(family_params(sol.family), sol.frame, sol.c1)
    start, span = _shoot_window(sol)
    return shoot_and_compare(quad, sol, start, span, tol=cfg.tol_shoot)


def _shoot_window(sol: Solution) -> tuple[float, float]:
    """A span of length <= 5 clear of the singular set, started where the
    profile is flattest (initial slope read off by differences is most
    accurate there)."""
    sing = sol.singularities
    xi0 = sol.frame.xi0
    if sing.kind == "none":
        return xi0, 5.0
    if sing.kind == "half_line":
        return (xi0 - 6.0, 5.0) if sing.valid_side < 0 else (xi0 + 6.0, -5.0)
    if sing.kind == "isolated":
        return max(p for p in sing.points) + 2.5, 5.0
    period = sing.period
    if sing.kind == "lattice_windows":
        return xi0, 0.8 * sing.half_width
    # lattice: launch from the mid-period turning point
    start = sing.offset + 0.5 * period
    return start, min(5.0, 0.32 * period)


def _implicit_grid(sol: Solution, rel) -> Grid | None:
    """Scan for a window where the hypergeometric argument stays <= 0.9."""
    sing = sol.singularities
    if sing.kind == "lattice":
        lo = sing.offset + 0.02 * sing.period
        hi = sing.offset + 0.98 * sing.period
    else:
        lo, hi = sol.frame.xi0 + 0.05, sol.frame.xi0 + 5.0
    xs = [lo + (hi - lo) * i / 400 for i in range(401)]
    good = []
    for x in xs:
        try:
            h = sol.evaluate_h(x)
        except ExpwaveError:
            continue
        if rel.in_domain(h, margin=0.9):
            good.append(x)
    if len(good) < 16:
        return None
    runs = [[good[0]]]
    for x in good[1:]:
        if x - runs[-1][-1] < 2.5 * (hi - lo) / 400:
            runs[-1].append(x)
        else:
            runs.append([x])
    best = max(runs, key=len)
    if len(best) < 16:
        return None
    return Grid(best[0], best[-1], 64)


_FIGURES = [
    ("fig1_liouville", FamilyLabel.Liouville, [
        ("soliton", 1.0, 1.0, 1, None),
        ("periodic", -1.0, 1.0, 1, None),
        ("rational", 0.0, 1.0, 1, None)]),
    ("fig2_tzitzeica_degenerate", FamilyLabel.Tzitzeica, [
        ("dark_soliton", -1.5, 1.0, 1, None),
        ("singular_soliton", -1.5, 1.0, -1, None),
        ("periodic_sec", -1.5, -1.0, 1, None),
        ("periodic_csc", -1.5, -1.0, -1, None)]),
    ("fig3_tzitzeica_elliptic", FamilyLabel.Tzitzeica, [
        ("lemniscatic", -3.0 / 4.0 ** (1 / 3), 1.0, 1, None),
        ("equianharmonic", 0.0, 1.0, 1, None),
        ("weierstrass", 1.0, 1.0, 1, None)]),
    ("fig4_sine_gordon_kinks", FamilyLabel.SineGordon, [
        ("kink", 1.0, 1.0, 1, None),
        ("antikink", 1.0, 1.0, -1, None),
        ("shifted_kink", -1.0, -1.0, 1, None)]),
    ("fig5_sine_gordon_amplitude", FamilyLabel.SineGordon, [
        ("superunitary_bounded", 0.0, -1.0, 1, None),
        ("subunitary_unbounded", -3.0, -1.0, 1, None)]),
    ("fig6_sinh_gordon_kinks", FamilyLabel.SinhGordon, [
        ("exp_kink", -0.5, 1.0, 1, None),
        ("gudermannian_kink", 0.5, 1.0, 1, None)]),
    ("fig7_sinh_amplitude", FamilyLabel.SinhGordon, [
        ("superunitary_bounded", -1.0, -1.0, 1, None),
        ("blowup_unbounded", 0.0, 1.0, 1, None)]),
]


def cmd_figures(cfg: JobConfig) -> int:
    outdir = cfg.output or "figures"
    n = cfg.n if cfg.n and cfg.n >= 16 else 801
    os.makedirs(outdir, exist_ok=True)
    sidecar: dict = {}
    for name, fam, curves in _FIGURES:
        lo, hi = -10.0, 10.0
        xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
        built = []
        meta = []
        for label, c1, lg, branch, case in curves:
            frame = FrameParams.from_lambda_gamma(lg)
            sol = construct(fam, c1, frame, branch=branch,
                            case=CaseLabel.parse(case) if case else None)
            built.append((label, sol))
            meta.append({"branch": branch, "c1": c1, "case": sol.case.name,
                         "curve": label, "lambda_gamma": lg, "xi0": 0.0})
        rows = ["xi," + ",".join(label for label, _ in built)]
        for x in xs:
            cells = [_fmt(x)]
            for label, sol in built:
                pad = sol.singularities.default_pad()
                if (sol.singularities.distance(x) < pad
                        or not sol.singularities.is_valid(x)):
                    cells.append("")
                    continue
                try:
                    val = (sol.evaluate_psi(x) if sol.psi_native
                           else sol.evaluate_h(x))
                except ExpwaveError:
                    cells.append("")
                    continue
                cells.append(_fmt(val))
            rows.append(",".join(cells))
        _atomic_write(os.path.join(outdir, name + ".csv"), "\n".join(rows) + "\n")
        sidecar[name] = meta
    _atomic_write(os.path.join(outdir, "figures_params.json"),
                  _json_dumps(sidecar) + "\n")
    sys.stdout.write(f"wrote {len(_FIGURES)} figure CSVs to {outdir}\n")
    return EXIT_OK


_COMMANDS = {
    "classify": cmd_classify,
    "solve": cmd_solve,
    "sample": cmd_sample,
    "verify": cmd_verify,
    "figures": cmd_figures,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _load_config(ns)
        if cfg.command not in _COMMANDS:
            raise ConfigError(f"unknown command {cfg.command!r}")
        return _COMMANDS[cfg.command](cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except ExpwaveError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())

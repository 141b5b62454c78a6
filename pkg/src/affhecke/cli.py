"""Command line: ``affhecke verify ...`` runs verification suites and emits a
versioned report; ``affhecke compute <target> ...`` (or the shortcuts
``spherical``, ``pieri``, ``hl``, ``morris``, ``P``, ``J``) prints one object.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction

from . import __version__
from .heckeops import CheckResult
from .qring import MultiplicityParams, ring_elem_to_str
from .rootsys import RootSystemError, build_root_system, parse_cartan_label, weight_ball

REPORT_SCHEMA = "report_v1"
SUITES = ("braid", "relations", "intertwine", "spherical", "unitarity", "pieri", "minuscule", "gln")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    type: str = "A1"
    rank: int | None = None
    q: str = "formal"
    L: int = 3
    seed: int = 1
    seeds: list = field(default_factory=lambda: [1])
    trials: int = 20
    points: int = 10
    suite: str = "all"
    format: str = "json"
    n: int | None = None

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def root_system(self):
        label = self.type if self.rank is None or self.type[-1].isdigit() else f"{self.type}{self.rank}"
        try:
            kind, rank = parse_cartan_label(label)
            return build_root_system(kind, rank)
        except RootSystemError as e:
            raise UsageError(str(e)) from e

    def params(self, rs, default_numeric: str | None = None):
        q = self.q
        if q == "formal" and default_numeric is not None:
            q = default_numeric
        if q == "formal":
            return MultiplicityParams.formal(rs)
        try:
            return MultiplicityParams.numeric(rs, Fraction(q))
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad --q value {q!r}") from e


# ------------------------------------------------------------------ parsing
def parse_weight(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError as e:
        raise UsageError(f"malformed weight {text!r}; expected comma-separated integers") from e


def parse_point(text: str) -> tuple:
    try:
        return tuple(Fraction(v) for v in text.replace(" ", "").split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"malformed spectral point {text!r}; expected rationals like 2/3,5/7") from e


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if getattr(args, "config", None) else RunConfig()
    for name in ("type", "rank", "q", "L", "seed", "trials", "points", "suite", "format", "n"):
        v = getattr(args, name, None)
        if v is not None:
            setattr(cfg, name, v)
    if getattr(args, "formal_q", False):
        cfg.q = "formal"
    if getattr(args, "seeds", None):
        cfg.seeds = [int(s) for s in args.seeds.split(",")]
    elif getattr(args, "seed", None) is not None:
        cfg.seeds = [args.seed]
    return cfg


# ------------------------------------------------------------------- suites
def _suite_checks(suite: str, cfg: RunConfig) -> tuple[list[CheckResult], dict]:
    from . import gln, heckeops, intertwine, pieri, spherical

    tables: dict = {}
    if suite == "gln":
        N = cfg.n or (cfg.root_system().rank + 1 if cfg.type.upper().startswith("A") else 3)
        P = gln.gl_params(N, cfg.q if cfg.q != "formal" else "formal")
        out = gln.verify_gl_relations(N, P, seeds=cfg.seeds, L=min(cfg.L, 2))
        out += gln.verify_gl_central(N, P, seed=cfg.seed)
        out += gln.verify_coordinate_map(N, P, seed=cfg.seed) if N <= 3 else []
        out += gln.verify_morris(N, P) if N <= 3 else []
        out.append(gln.verify_hl_structure(N, P))
        out.append(gln.verify_schur_limit(N))
        return out, tables
    rs = cfg.root_system()
    if suite == "braid":
        out = []
        if rs.label == "A2":
            res = heckeops.check_a2_braid_table()
            tables["a2_braid_table"] = res.detail.get("table")
            out.append(res)
        P = cfg.params(rs)
        out += [r for r in heckeops.verify_relations(rs, P, reps=("difference",), seeds=cfg.seeds[:1], L=cfg.L)
                if "braid" in r.relation]
        return out, tables
    if suite == "relations":
        return heckeops.verify_relations(rs, cfg.params(rs), seeds=cfg.seeds, L=cfg.L), tables
    if suite == "intertwine":
        P = cfg.params(rs)
        out = intertwine.verify_intertwining(rs, P, trials=cfg.trials, seed=cfg.seed)
        out.append(intertwine.verify_routes(rs, P, seed=cfg.seed))
        out.append(intertwine.verify_well_defined(rs, P, seed=cfg.seed))
        lam_max = rs.fundamental_weight(1) if rs.rank > 2 else tuple([1] * rs.rank)
        out += intertwine.verify_roundtrip(rs, P, lam_max, seed=cfg.seed)
        out += intertwine.verify_equivalence(rs, P, lam_max, seed=cfg.seed)
        out += intertwine.verify_stability(rs, P, seed=cfg.seed)
        return out, tables
    if suite == "spherical":
        P = cfg.params(rs)
        out = spherical.verify_P_identities(rs, P)
        out.append(spherical.verify_spherical_routes(rs, P, points=cfg.points, seed=cfg.seed))
        if rs.rank <= 2:
            N = cfg.params(rs, default_numeric="2/7")
            out += spherical.verify_diagonalization(rs, N, points=cfg.points, seed=cfg.seed)
        return out, tables
    if suite == "unitarity":
        N = cfg.params(rs, default_numeric="1/2")
        out = spherical.verify_delta_identities(rs, N)
        out += spherical.verify_unitarity(rs, N, trials=cfg.trials, seed=cfg.seed)
        tables["norm_estimates"] = spherical.norm_estimates(rs, N, seed=cfg.seed)
        return out, tables
    if suite == "pieri":
        if not rs.irreducible:
            return [CheckResult("Pieri suite", rs.label, rs.rank, "skip",
                                detail={"reason": "needs an irreducible root system"})], tables
        P = cfg.params(rs)
        out = pieri.verify_pieri_suite(rs, P, radius=3 if rs.rank <= 2 else 2, seed=cfg.seed)
        for om in pieri.pieri_weights(rs):
            out.append(pieri.verify_eigen_consistency(rs, P, om, seed=cfg.seed))
            if rs.rank <= 2:
                out.append(pieri.verify_diagonalization_M(rs, P, om, points=cfg.points, seed=cfg.seed))
        out.append(pieri.verify_self_adjoint(rs, cfg.params(rs, default_numeric="1/2"), seed=cfg.seed))
        return out, tables
    if suite == "minuscule":
        return intertwine.verify_minuscule_identities(rs, cfg.params(rs), seed=cfg.seed), tables
    raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    suites = SUITES if cfg.suite == "all" else tuple(s.strip() for s in cfg.suite.split(","))
    checks = []
    tables = {}
    timings = {}
    for s in suites:
        if s == "braid" and cfg.suite == "all":
            continue  # braid relations are part of "relations"
        t = time.perf_counter()
        res, tab = _suite_checks(s, cfg)
        timings[s] = round(time.perf_counter() - t, 3)
        for r in res:
            d = r.to_json()
            d["id"] = f"{s}:{r.type}:{r.relation}"
            checks.append(d)
        tables.update(tab)
    checks.sort(key=lambda d: d["id"])
    status = "fail" if any(c["status"] == "fail" for c in checks) else "pass"
    deviations = [c["id"] for c in checks if c["status"] == "deviation"]
    report = {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "config": asdict(cfg),
        "status": status,
        "checks": checks,
        "timings": timings,
    }
    if deviations:
        # literal statements that the verified corrected form replaces
        report["deviations"] = deviations
    if tables:
        report["tables"] = tables
    return (0 if status == "pass" else 1), report


# ------------------------------------------------------------------ compute
def _json_coeff(c):
    return ring_elem_to_str(c)


def compute_spherical(cfg, lam, x, table=False):
    from .spherical import Delta_weight, SphericalEvaluator

    rs = cfg.root_system()
    P = cfg.params(rs)
    ev = SphericalEvaluator(rs, P, x)
    if not table:
        return _json_coeff(ev(lam))
    rows = []
    for mu in weight_ball(rs.rank, cfg.L):
        if rs.is_dominant(mu):
            D = Delta_weight(rs, P, mu) if not P.is_formal and all(0 < v < 1 for v in P.values) else ""
            rows.append({"lambda": list(mu), "Phi": _json_coeff(ev(mu)), "Delta": str(D)})
    return rows


def compute_pieri(cfg, lam, omega_spec):
    from .pieri import U_coeff, V_coeff, resolve_omega

    rs = cfg.root_system()
    P = cfg.params(rs)
    if omega_spec is None:
        omega_spec = "minuscule" if rs.minuscule_weights() else "quasi"
    if omega_spec not in ("quasi", "minuscule"):
        omega_spec = parse_weight(omega_spec)
    try:
        om = resolve_omega(rs, omega_spec)
    except RootSystemError as e:
        raise UsageError(str(e)) from e
    if not rs.is_dominant(lam) or len(lam) != rs.rank:
        raise UsageError(f"lambda {list(lam)} must be a dominant weight of rank {rs.rank}")
    terms = []
    for nu in sorted(rs.orbit(om), reverse=True):
        if rs.is_dominant(tuple(a + b for a, b in zip(lam, nu))):
            terms.append({"nu": list(nu), "V": _json_coeff(V_coeff(rs, P, lam, nu))})
    U = U_coeff(rs, P, lam, om)
    return {"omega": list(om), "lambda": list(lam), "U": _json_coeff(U) if U else 0, "terms": terms}


def compute_hl(cfg, lam, expand=True):
    from . import gln

    N = cfg.n or len(lam)
    if len(lam) != N:
        raise UsageError(f"lambda needs {N} parts")
    if not gln.is_sorted(lam):
        raise UsageError(f"{list(lam)} is not weakly decreasing")
    if cfg.q != "formal" and Fraction(cfg.q) == 0:
        p = gln.hall_littlewood_t(N, lam, 0)
        note = "q = 0 in the symmetrization; prefactor q^{2<rho,lambda>} omitted"
    else:
        P = gln.gl_params(N, cfg.q)
        p = gln.hall_littlewood(N, P, lam)
        note = None
    out = p.to_json() if expand else {"polynomial": str(p)}
    out["polynomial"] = str(p)
    if note:
        out["note"] = note
    return out


def compute_morris(cfg, lam, r):
    from . import gln

    N = cfg.n or len(lam)
    P = gln.gl_params(N, cfg.q)
    try:
        terms = gln.morris_pieri(N, P, r, lam)
    except ValueError as e:
        raise UsageError(str(e)) from e
    return {"r": r, "lambda": list(lam), "terms": [{"mu": list(m), "V": _json_coeff(c)} for m, c in terms]}


def compute_P(cfg, lam):
    from .spherical import macdonald_P

    rs = cfg.root_system()
    if len(lam) != rs.rank:
        raise UsageError(f"lambda needs {rs.rank} coordinates")
    return str(macdonald_P(rs, cfg.params(rs), lam))


def compute_J(cfg, f_json, inverse=False, lam_max=None):
    from .intertwine import IntertwinerContext
    from .latfun import FiniteFunction

    rs = cfg.root_system()
    P = cfg.params(rs)
    f = FiniteFunction.from_json(f_json, P.ring)
    ctx = IntertwinerContext(rs, P)
    if inverse:
        region = rs.saturated_region(lam_max or tuple([1] * rs.rank))
        return ctx.apply_J_inverse(f, region).to_json()
    g = ctx.apply_J(f)
    return FiniteFunction(rs.rank, {lam: g(lam) for lam in weight_ball(rs.rank, cfg.L)}).to_json()


# ------------------------------------------------------------------- output
def _emit(obj, fmt: str, stream):
    if fmt == "json":
        json.dump(obj, stream, indent=2, sort_keys=False)
        stream.write("\n")
    elif fmt == "csv":
        rows = obj
        if isinstance(obj, dict) and "checks" in obj:
            rows = [{k: c.get(k, "") for k in ("id", "status", "type", "rank", "relation")} for c in obj["checks"]]
        elif isinstance(obj, dict) and "terms" in obj:
            rows = obj["terms"]
        if not isinstance(rows, list):
            stream.write(f"{rows}\n")
            return
        buf = io.StringIO()
        keys = list(rows[0]) if rows else []
        w = csv.DictWriter(buf, fieldnames=keys, delimiter=";")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        stream.write(buf.getvalue())
    else:
        if isinstance(obj, dict) and "checks" in obj:
            for c in obj["checks"]:
                stream.write(f"{c['status'].upper():5} {c['id']}\n")
            stream.write(f"overall: {obj['status']}\n")
        elif isinstance(obj, str):
            stream.write(obj + "\n")
        else:
            stream.write(json.dumps(obj) + "\n")


# ------------------------------------------------------------------- parser
def _common(p, with_type=True):
    if with_type:
        p.add_argument("--type", help="Cartan type, e.g. A2, B3, G2, A1xA1")
        p.add_argument("--rank", type=int, help="rank when --type is a bare letter")
    p.add_argument("--q", help='rational parameter value or "formal"')
    p.add_argument("--formal-q", action="store_true", help="formal coefficients (same as --q formal)")
    p.add_argument("-L", "--L", type=int, help="support radius")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json", "csv", "text"))
    p.add_argument("--config", help="JSON file with RunConfig fields")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="affhecke", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("--suite", help=f"comma list from {', '.join(SUITES)} or all")
    v.add_argument("--seeds", help="comma list of seeds")
    v.add_argument("--trials", type=int)
    v.add_argument("--points", type=int)
    v.add_argument("--n", type=int, help="N for the GL_N suite")

    def add_targets(parent, prefix=""):
        s = parent.add_parser(f"{prefix}spherical", help="Macdonald spherical function value")
        _common(s)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--x", required=True)
        s.add_argument("--table", action="store_true", help="rows (lambda; Phi; Delta) over the L-ball")
        s = parent.add_parser(f"{prefix}pieri", help="V and U coefficients")
        _common(s)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--omega", help='"quasi", "minuscule" or a weight')
        s = parent.add_parser(f"{prefix}hl", help="Hall-Littlewood polynomial")
        _common(s, with_type=False)
        s.add_argument("--n", type=int)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--expand", action="store_true", help="monomial expansion")
        s = parent.add_parser(f"{prefix}morris", help="Morris Pieri expansion")
        _common(s, with_type=False)
        s.add_argument("--n", type=int)
        s.add_argument("--r", type=int, required=True)
        s.add_argument("--lambda", dest="lam", required=True)
        s = parent.add_parser(f"{prefix}P", help="Macdonald polynomial P_lambda")
        _common(s)
        s.add_argument("--lambda", dest="lam", required=True)
        s = parent.add_parser(f"{prefix}J", help="intertwiner applied to a lattice function")
        _common(s)
        s.add_argument("--f", required=True, help="lattice-function JSON, or @file")
        s.add_argument("--inverse", action="store_true")
        s.add_argument("--lambda-max", dest="lam_max")

    c = sub.add_parser("compute", help="compute one object")
    csub = c.add_subparsers(dest="target", required=True)
    add_targets(csub)
    add_targets(sub)
    return ap


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config_from_args(args)
        if args.command == "verify":
            code, report = cmd_verify(cfg)
            _emit(report, cfg.format, stdout)
            return code
        target = args.target if args.command == "compute" else args.command
        cfg.format = args.format or ("csv" if getattr(args, "table", False) else "json")
        lam = parse_weight(args.lam) if getattr(args, "lam", None) else None
        if target == "spherical":
            rs = cfg.root_system()
            if len(lam) != rs.rank:
                raise UsageError(f"lambda needs {rs.rank} coordinates")
            from .spherical import DegenerateSpectralPoint

            try:
                obj = compute_spherical(cfg, lam, parse_point(args.x), args.table)
            except DegenerateSpectralPoint as e:
                raise UsageError(f"{e}") from e
        elif target == "pieri":
            obj = compute_pieri(cfg, lam, args.omega)
        elif target == "hl":
            obj = compute_hl(cfg, lam, args.expand)
        elif target == "morris":
            obj = compute_morris(cfg, lam, args.r)
        elif target == "P":
            obj = compute_P(cfg, lam)
        elif target == "J":
            text = args.f
            if text.startswith("@"):
                with open(text[1:]) as fh:
                    text = fh.read()
            lm = parse_weight(args.lam_max) if args.lam_max else None
            obj = compute_J(cfg, text, args.inverse, lm)
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(target)
        _emit(obj, cfg.format, stdout)
        return 0
    except (UsageError, RootSystemError, json.JSONDecodeError, KeyError, FileNotFoundError) as e:
        sys.stderr.write(f"affhecke: error: {e}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

"""Command-line front end: presets, state labels, spectrum reports,
wave-function export and diagnostics.

Exit codes: 0 success, 1 configuration error, 2 solver failure,
3 diagnostic failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from nqa import __version__
from nqa.angular import CouplingTable, Side, build_coupling_table, verify_sum_rules
from nqa.kernel import DEFAULT_LOG_RANGE, MAPPINGS
from nqa.reference import dirac_comparison_levels, dirac_coulomb_energy, dirac_reference_wavefunction
from nqa.solver import (
    ORBITAL_LETTERS,
    QuantumState,
    RadialSolution,
    TwoBodySystem,
    drop_small_terms_check,
    mass_interchange_check,
    refine_uncertainty,
    solve_state,
)

EXIT_OK, EXIT_CONFIG, EXIT_SOLVER, EXIT_DIAGNOSTIC = 0, 1, 2, 3

DEFAULT_CONSTANTS = {
    "m_e": 0.51099895,
    "m_mu": 105.6583755,
    "m_p": 938.2720882,
    "alpha": 7.2973525693e-3,
}

# preset -> (m1 constant, m2 constant, reporting unit)
PRESETS = {
    "hydrogen-e": ("m_e", "m_p", "eV"),
    "hydrogen-mu": ("m_mu", "m_p", "keV"),
    "positronium": ("m_e", "m_e", "eV"),
    "e-mu": ("m_e", "m_mu", "eV"),
    "mu-mu": ("m_mu", "m_mu", "keV"),
}

# MeV -> unit
UNIT_FACTORS = {"MeV": 1.0, "keV": 1e3, "eV": 1e6, "meV": 1e9}

DEFAULT_STATES = ("1S0F0",)
DEFAULT_GRIDS = (800, 1000, 1200)
DIRAC_LIMIT_RATIO = 1e6
DIRAC_LIMIT_TOLERANCE = 1e-6


class ConfigError(ValueError):
    """Invalid run configuration."""


_LABEL = re.compile(r"^\s*(\d+)([A-Z])([01])F(\d+)\s*$")


def parse_state_label(text: str) -> QuantumState:
    """Parse ``<n><L-letter><S>F<F>``, e.g. ``1S0F0`` or ``2P1F1``.

    Orbital letters are ``S P D F G H I K`` for ``L = 0..7``; the grammar is
    positional, so ``F`` as an orbital letter (``4F1F3``) is unambiguous.
    """
    m = _LABEL.match(text)
    if m is None:
        raise ConfigError(f"malformed state label {text!r}; expected e.g. 1S0F0")
    n, letter, S, F = int(m[1]), m[2], int(m[3]), int(m[4])
    if letter not in ORBITAL_LETTERS:
        raise ConfigError(f"unknown orbital letter {letter!r} in {text!r}")
    try:
        return QuantumState(n=n, F=F, L=ORBITAL_LETTERS.index(letter), S=S)
    except ValueError as exc:
        raise ConfigError(f"invalid state {text!r}: {exc}") from exc


@dataclass(frozen=True)
class RunConfig:
    system: TwoBodySystem
    states: tuple[QuantumState, ...]
    grids: tuple[int, ...] = DEFAULT_GRIDS
    scale: float | None = None
    mapping: str = "log"
    log_range: tuple[float, float] = DEFAULT_LOG_RANGE
    unit: str = "eV"
    fmt: str = "table"
    out: str | None = None
    wavefunction_dir: str | None = None
    compare_dirac: bool = True
    swap_masses: bool = False
    drop_small_terms: bool = False
    diagnostics: bool = False
    workers: int = 1
    preset: str | None = None
    constants: dict = field(default_factory=lambda: dict(DEFAULT_CONSTANTS))

    def __post_init__(self):
        if not self.states:
            raise ConfigError("at least one state is required")
        if not self.grids or min(self.grids) < 8:
            raise ConfigError(f"grid sizes must be at least 8, got {self.grids}")
        if self.mapping not in MAPPINGS:
            raise ConfigError(f"unknown mapping {self.mapping!r}")
        if self.unit not in UNIT_FACTORS:
            raise ConfigError(f"unknown unit {self.unit!r}")
        if self.fmt not in ("table", "json", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.scale is not None and not self.scale > 0:
            raise ConfigError("--lambda must be positive")
        if self.workers < 1:
            raise ConfigError("--workers must be at least 1")

    @property
    def solve_system(self) -> TwoBodySystem:
        return self.system.swapped() if self.swap_masses else self.system

    @property
    def unit_factor(self) -> float:
        return UNIT_FACTORS[self.unit]

    def grid_kwargs(self) -> dict:
        kw = {"mapping": self.mapping, "scale": self.scale}
        if self.mapping == "log":
            kw["log_range"] = self.log_range
        return kw

    def provenance(self) -> dict:
        sys_ = self.solve_system
        return {
            "version": __version__,
            "preset": self.preset,
            "system": {"m1_mev": sys_.m1, "m2_mev": sys_.m2, "alpha": sys_.alpha, "label": sys_.label},
            "swap_masses": self.swap_masses,
            "small_terms": not self.drop_small_terms,
            "constants": dict(self.constants),
            "grid": {
                "sizes": list(self.grids),
                "mapping": self.mapping,
                "scale_over_m1": self.scale if self.scale is not None else sys_.bohr_momentum,
                "log_range": list(self.log_range) if self.mapping == "log" else None,
            },
            "unit": self.unit,
            "mev_to_unit": self.unit_factor,
        }


def system_from_preset(name: str, constants: dict | None = None, alpha: float | None = None) -> TwoBodySystem:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    c = dict(DEFAULT_CONSTANTS, **(constants or {}))
    a, b, _ = PRESETS[name]
    return TwoBodySystem(c[a], c[b], c["alpha"] if alpha is None else alpha, name)


# ---------------------------------------------------------------------------
# spectrum


@dataclass
class StateRecord:
    label: str
    unit: str
    epsilon: float | None = None
    sigma: float | None = None
    dirac_energy: float | None = None
    delta: float | None = None
    dirac_j: str | None = None
    residual: float | None = None
    node_count: int | None = None
    epsilons: list = field(default_factory=list)
    status: str = "ok"
    error: str | None = None
    extra_dirac: dict = field(default_factory=dict)


@dataclass
class SpectrumReport:
    records: list[StateRecord]
    provenance: dict

    @property
    def ok(self) -> bool:
        return all(r.status == "ok" for r in self.records)

    def to_json(self) -> str:
        return json.dumps({"provenance": self.provenance, "records": [asdict(r) for r in self.records]}, indent=2)

    _COLUMNS = ("label", "unit", "epsilon", "sigma", "dirac_energy", "delta", "residual", "node_count", "status")

    def to_csv(self) -> str:
        buf = io.StringIO()
        for k, v in self.provenance.items():
            buf.write(f"# {k}: {json.dumps(v)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self._COLUMNS)
        for r in self.records:
            w.writerow(["" if getattr(r, c) is None else _fmt(getattr(r, c)) for c in self._COLUMNS])
        return buf.getvalue()

    def to_table(self) -> str:
        head = f"{'state':<8} {'energy':>18} {'sigma':>11} {'dirac':>18} {'delta':>11} {'nodes':>5} {'residual':>9}"
        lines = [head, "-" * len(head)]
        for r in self.records:
            if r.status != "ok":
                lines.append(f"{r.label:<8} FAILED: {r.error}")
                continue
            sig = f"{r.sigma:11.3e}" if r.sigma is not None else f"{'-':>11}"
            dirac = f"{r.dirac_energy:18.10f}" if r.dirac_energy is not None else f"{'-':>18}"
            delta = f"{r.delta:11.3e}" if r.delta is not None else f"{'-':>11}"
            lines.append(f"{r.label:<8} {r.epsilon:18.10f} {sig} {dirac} {delta} {r.node_count:5d} {r.residual:9.1e}")
        g = self.provenance["grid"]
        s = self.provenance["system"]
        lines.append(
            f"unit {self.provenance['unit']}; m1={s['m1_mev']} MeV m2={s['m2_mev']} MeV alpha={s['alpha']}; "
            f"grids {g['sizes']} ({g['mapping']}, scale {g['scale_over_m1']:.6g} m1); version {self.provenance['version']}"
        )
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        return {"table": self.to_table, "json": self.to_json, "csv": self.to_csv}[fmt]()


def _fmt(v) -> str:
    return f"{v:.17g}" if isinstance(v, float) else str(v)


def _solve_record(config: RunConfig, state: QuantumState) -> StateRecord:
    system = config.solve_system
    f = system.m1 * config.unit_factor
    rec = StateRecord(state.label, config.unit)
    try:
        kw = dict(config.grid_kwargs(), small_terms=not config.drop_small_terms)
        sizes = list(config.grids)
        sols = [solve_state(system, state, n, **kw) for n in sizes]
        eps = [s.epsilon for s in sols]
        sol = sols[int(np.argmax(sizes))]
        best = sol.epsilon
        if len(sizes) > 1:
            rec.sigma = (max(eps) - min(eps)) * f
        rec.epsilon = best * f
        rec.epsilons = [e * f for e in eps]
        rec.residual = sol.residual
        rec.node_count = sol.node_count
        if sol.flagged:
            rec.status, rec.error = "flagged", f"residual {sol.residual:.2e} above limit"
    except (ValueError, LookupError, np.linalg.LinAlgError) as exc:
        rec.status, rec.error = "failed", str(exc)
        return rec
    if config.compare_dirac:
        mu = system.mu
        levels = dirac_comparison_levels(state.n, state.L, mu, system.alpha)
        for lv in levels:
            rec.extra_dirac[f"j={lv.j}"] = lv.energy * config.unit_factor
        main = levels[-1]
        rec.dirac_j = str(main.j)
        rec.dirac_energy = main.energy * config.unit_factor
        rec.delta = rec.epsilon - rec.dirac_energy
    return rec


def run_spectrum(config: RunConfig) -> SpectrumReport:
    """Solve every configured state and attach grid spread and Dirac comparison."""
    if config.workers > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            records = list(pool.map(lambda s: _solve_record(config, s), config.states))
    else:
        records = [_solve_record(config, s) for s in config.states]
    return SpectrumReport(records, config.provenance())


# ---------------------------------------------------------------------------
# wave-function export

WAVEFUNCTION_COLUMNS = ("p_over_m1", "g", "h", "g_dirac", "g_minus_g_dirac")


def solve_for_export(config: RunConfig, state: QuantumState) -> tuple[RadialSolution, RadialSolution]:
    system = config.solve_system
    kw = dict(config.grid_kwargs(), small_terms=not config.drop_small_terms)
    sol = solve_state(system, state, max(config.grids), **kw)
    ref = dirac_reference_wavefunction(state.n, state.L, system.mu, system.alpha, sol.grid, m1=system.m1)
    return sol, ref


def export_wavefunction(config: RunConfig, state: QuantumState, path) -> Path:
    """Write ``p_over_m1, g, h, g_dirac, g_minus_g_dirac`` with 17 significant digits."""
    sol, ref = solve_for_export(config, state)
    path = Path(path)
    prov = dict(config.provenance(), state=state.label, epsilon_over_m1=sol.epsilon, norm=sol.norm_convention)
    with path.open("w", newline="") as fh:
        for k, v in prov.items():
            fh.write(f"# {k}: {json.dumps(v)}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(WAVEFUNCTION_COLUMNS)
        for row in zip(sol.grid.nodes, sol.g, sol.h, ref.g, sol.g - ref.g):
            w.writerow([f"{float(x):.17g}" for x in row])
    return path


def read_wavefunction(path) -> tuple[dict, dict[str, np.ndarray]]:
    """Inverse of :func:`export_wavefunction`: ``(provenance, columns)``."""
    meta, rows = {}, []
    with Path(path).open() as fh:
        lines = fh.read().splitlines()
    body = []
    for line in lines:
        if line.startswith("# "):
            key, _, val = line[2:].partition(": ")
            meta[key] = json.loads(val)
        else:
            body.append(line)
    reader = csv.reader(body)
    header = next(reader)
    rows = [[float(x) for x in r] for r in reader]
    data = np.array(rows)
    return meta, {name: data[:, k] for k, name in enumerate(header)}


# ---------------------------------------------------------------------------
# diagnostics


@dataclass
class DiagnosticResult:
    name: str
    passed: bool
    detail: str
    values: dict = field(default_factory=dict)


@dataclass
class DiagnosticsReport:
    results: list[DiagnosticResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        return "\n".join(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}" for r in self.results)

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.results], indent=2)


def sum_rule_diagnostic(
    max_F: int = 3, table_hook: Callable[[CouplingTable], CouplingTable] | None = None
) -> DiagnosticResult:
    """Sum rules for every ``(F, mF)`` with ``F <= max_F``; ``table_hook`` alters each ``C`` table."""
    worst, failed = 0.0, []
    for F in range(max_F + 1):
        for mF in range(-F, F + 1):
            left = build_coupling_table(F, mF, Side.LEFT)
            if table_hook is not None:
                left = table_hook(left)
            rep = verify_sum_rules(left, build_coupling_table(F, mF, Side.RIGHT))
            worst = max(worst, *rep.deviations.values())
            failed += [f"F={F} mF={mF} {k}" for k in rep.failed]
    detail = f"max deviation {worst:.2e}" + (f"; failing {failed[:4]}" if failed else "")
    return DiagnosticResult("sum rules", not failed, detail, {"max_deviation": worst})


def run_diagnostics(
    config: RunConfig, table_hook: Callable[[CouplingTable], CouplingTable] | None = None
) -> DiagnosticsReport:
    """Mass interchange, small-term removal, large-``m2`` Dirac limit and sum rules.

    The first state of ``config`` is used.  Mass interchange passes within
    2 sigma, the small-term shift must stay below sigma, and the Dirac limit
    (``m2 = 1e6 m1``) must match the analytic level to ``1e-6`` relative.
    """
    state = config.states[0]
    system = config.solve_system
    kw = config.grid_kwargs()
    grids = list(config.grids) if len(config.grids) > 1 else [config.grids[0], config.grids[0] + 200]
    results = []

    mi = mass_interchange_check(system, state, grids, **kw)
    results.append(
        DiagnosticResult(
            "mass interchange",
            mi.passed(2.0),
            f"|d eps| = {mi.difference_mev * 1e9:.3e} meV, sigma = {mi.sigma_mev * 1e9:.3e} meV ({mi.in_sigmas:.3g} sigma)",
            asdict(mi),
        )
    )

    best, sigma, _ = refine_uncertainty(system, state, grids, **kw)
    st = drop_small_terms_check(system, state, max(grids), **kw)
    results.append(
        DiagnosticResult(
            "small terms",
            st.difference < sigma or st.difference == 0.0,
            f"|d eps| = {st.difference * system.m1 * 1e9:.3e} meV, sigma = {sigma * system.m1 * 1e9:.3e} meV, "
            f"expected size {st.bound * system.m1 * 1e9:.3e} meV",
            {"difference_over_m1": st.difference, "sigma_over_m1": sigma, "bound_over_m1": st.bound},
        )
    )

    heavy = TwoBodySystem(system.m1, DIRAC_LIMIT_RATIO * system.m1, system.alpha, "dirac-limit")
    s0 = QuantumState(1, 0, 0, 0)
    eps = solve_state(heavy, s0, 800, **kw).epsilon
    exact = dirac_coulomb_energy(1, 0.5, 1.0, system.alpha)
    rel = abs(eps / exact - 1.0)
    results.append(
        DiagnosticResult(
            "dirac limit",
            rel <= DIRAC_LIMIT_TOLERANCE,
            f"m2 = {DIRAC_LIMIT_RATIO:g} m1: relative deviation {rel:.4e} (limit {DIRAC_LIMIT_TOLERANCE:g})",
            {"relative_deviation": rel},
        )
    )

    results.append(sum_rule_diagnostic(3, table_hook))
    return DiagnosticsReport(results)


# ---------------------------------------------------------------------------
# argument handling


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def read_config_file(path) -> dict[str, str]:
    """Flat ``key = value`` text; ``#`` starts a comment, keys use flag spelling."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{num}: expected key = value")
        out[key.strip().lstrip("-").replace("-", "_")] = val.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nqa", description="Two-body Coulomb bound states from the one-loop N-quantum equation.")
    p.add_argument("--config", help="flat key = value file; flags override it")
    p.add_argument("--system", choices=sorted(PRESETS), help="system preset (default hydrogen-e)")
    p.add_argument("--m1", type=float, help="lepton mass in MeV")
    p.add_argument("--m2", type=float, help="second constituent mass in MeV")
    p.add_argument("--alpha", type=float, help="coupling constant")
    p.add_argument("--states", help="comma-separated labels such as 1S0F0,2S1F1")
    p.add_argument("--grids", help="comma-separated grid sizes (several give a spread sigma)")
    p.add_argument("--lambda", dest="scale", type=float, help="grid scale in units of m1 (default alpha mu / m1)")
    p.add_argument("--mapping", choices=MAPPINGS)
    p.add_argument("--log-range", help="lo,hi of the log grid relative to the scale")
    p.add_argument("--unit", choices=sorted(UNIT_FACTORS), help="reporting unit (default from preset)")
    p.add_argument("--out", help="report file (default stdout)")
    p.add_argument("--format", dest="fmt", choices=("table", "json", "csv"))
    p.add_argument("--wavefunction-dir", help="write <label>.csv wave functions into this directory")
    p.add_argument("--compare-dirac", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--swap-masses", action="store_true", default=None)
    p.add_argument("--drop-small-terms", action="store_true", default=None)
    p.add_argument("--diagnostics", action="store_true", default=None)
    p.add_argument("--workers", type=int)
    for k in DEFAULT_CONSTANTS:
        if k != "alpha":
            p.add_argument(f"--{k.replace('_', '-')}", dest=k, type=float, help=f"override constant {k} (MeV)")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


_FILE_ALIASES = {"lambda": "scale", "format": "fmt"}
_BOOL = {"1": True, "true": True, "yes": True, "on": True, "0": False, "false": False, "no": False, "off": False}


def _merge(args: argparse.Namespace, file_values: dict[str, str], parser: argparse.ArgumentParser) -> dict:
    known = {a.dest: a for a in parser._actions}
    merged = {}
    for key, raw in file_values.items():
        key = _FILE_ALIASES.get(key, key)
        if key not in known or key in ("help", "version", "config"):
            raise ConfigError(f"unknown config key {key!r}")
        action = known[key]
        if action.nargs == 0 or isinstance(action, argparse.BooleanOptionalAction):
            if raw.lower() not in _BOOL:
                raise ConfigError(f"config key {key!r} expects a boolean, got {raw!r}")
            merged[key] = _BOOL[raw.lower()]
        elif action.type is not None:
            try:
                merged[key] = action.type(raw)
            except ValueError as exc:
                raise ConfigError(f"config key {key!r}: {exc}") from exc
        else:
            if action.choices and raw not in action.choices:
                raise ConfigError(f"config key {key!r} must be one of {sorted(action.choices)}")
            merged[key] = raw
    for key, val in vars(args).items():
        if val is not None:
            merged[key] = val
    return merged


def _int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"bad {what}: {text!r}") from exc


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    file_values = read_config_file(args.config) if args.config else {}
    v = _merge(args, file_values, parser)

    constants = dict(DEFAULT_CONSTANTS)
    for k in DEFAULT_CONSTANTS:
        if v.get(k) is not None:
            constants[k] = v[k]
    preset = v.get("system")
    explicit = [v.get("m1"), v.get("m2")]
    try:
        if any(x is not None for x in explicit):
            if preset is None and None in explicit:
                raise ConfigError("--m1 and --m2 must be given together without a preset")
            base = system_from_preset(preset, constants) if preset else None
            m1 = v.get("m1") if v.get("m1") is not None else base.m1
            m2 = v.get("m2") if v.get("m2") is not None else base.m2
            system = TwoBodySystem(m1, m2, constants["alpha"], preset or "custom")
        else:
            preset = preset or "hydrogen-e"
            system = system_from_preset(preset, constants)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    unit = v.get("unit") or (PRESETS[preset][2] if preset else "eV")
    states = tuple(parse_state_label(s) for s in (v.get("states") or ",".join(DEFAULT_STATES)).split(",") if s.strip())
    grids = _int_list(v["grids"], "grid list") if v.get("grids") else DEFAULT_GRIDS
    log_range = DEFAULT_LOG_RANGE
    if v.get("log_range"):
        try:
            lo, hi = (float(x) for x in v["log_range"].split(","))
        except ValueError as exc:
            raise ConfigError(f"bad log range {v['log_range']!r}") from exc
        log_range = (lo, hi)
    return RunConfig(
        system=system,
        states=states,
        grids=grids,
        scale=v.get("scale"),
        mapping=v.get("mapping") or "log",
        log_range=log_range,
        unit=unit,
        fmt=v.get("fmt") or "table",
        out=v.get("out"),
        wavefunction_dir=v.get("wavefunction_dir"),
        compare_dirac=True if v.get("compare_dirac") is None else bool(v["compare_dirac"]),
        swap_masses=bool(v.get("swap_masses")),
        drop_small_terms=bool(v.get("drop_small_terms")),
        diagnostics=bool(v.get("diagnostics")),
        workers=v.get("workers") or 1,
        preset=preset,
        constants=constants,
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = config_from_args(argv)
    except ConfigError as exc:
        sys.stderr.write(f"nqa: configuration error: {exc}\n")
        return EXIT_CONFIG

    if config.diagnostics:
        try:
            rep = run_diagnostics(config)
        except (ValueError, LookupError, np.linalg.LinAlgError) as exc:
            sys.stderr.write(f"nqa: solver failure during diagnostics: {exc}\n")
            return EXIT_SOLVER
        _emit(rep.to_json() if config.fmt == "json" else rep.to_text(), config.out)
        return EXIT_OK if rep.passed else EXIT_DIAGNOSTIC

    report = run_spectrum(config)
    _emit(report.render(config.fmt), config.out)
    if config.wavefunction_dir:
        d = Path(config.wavefunction_dir)
        try:
            d.mkdir(parents=True, exist_ok=True)
            for st, rec in zip(config.states, report.records):
                if rec.status == "ok":
                    export_wavefunction(config, st, d / f"{st.label}.csv")
        except OSError as exc:
            sys.stderr.write(f"nqa: cannot write wave functions: {exc}\n")
            return EXIT_CONFIG
        except (ValueError, LookupError) as exc:
            sys.stderr.write(f"nqa: wave-function export failed: {exc}\n")
            return EXIT_SOLVER
    return EXIT_OK if report.ok else EXIT_SOLVER


if __name__ == "__main__":
    raise SystemExit(main())

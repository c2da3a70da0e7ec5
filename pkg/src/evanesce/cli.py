"""Command-line surface: identity verification and physics tables.

Subcommands
-----------
verify      run the randomized identity suites; exit 0 iff all pass
modes       cutoff table of a rectangular guide up to a frequency bound
dispersion  energy / momentum / velocity table over a frequency grid
propagator  closed-form propagator values along a (t, r) ray
decay       space-like decay-length fit against the Compton wavelength

Common options: ``--output {csv,json}`` (default csv), ``--out PATH``
(default stdout), ``--config PATH``.  A config file is flat ``key = value``
text (``#`` comments allowed); keys are the long option names with dashes
replaced by underscores.  Precedence: command-line flags > config file >
built-in defaults.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import propagator as prop
from . import waveguide
from .tables import Table, render
from .verify import run_verify

__all__ = ["main"]

_REQUIRED = object()

_COMMON_DEFAULTS = {"output": "csv", "out": None}

_DEFAULTS = {
    "verify": {
        "seed": 2026,
        "trials": 200,
        "tol_algebra": 1e-12,
        "tol_eigen": 1e-10,
        "tol_kinematics": 1e-10,
        "tol_oracle": 1e-3,
        **_COMMON_DEFAULTS,
    },
    "modes": {
        "b1": _REQUIRED,
        "b2": _REQUIRED,
        "max_freq": _REQUIRED,
        "orientation": "0,0,1",
        "allow_square": False,
        **_COMMON_DEFAULTS,
    },
    "dispersion": {
        "b1": _REQUIRED,
        "b2": _REQUIRED,
        "omega_min": _REQUIRED,
        "omega_max": _REQUIRED,
        "steps": 50,
        "orientation": "0,0,1",
        "allow_square": False,
        **_COMMON_DEFAULTS,
    },
    "propagator": {
        "omega_c": None,
        "variant": _REQUIRED,
        "t0": _REQUIRED,
        "t1": _REQUIRED,
        "r0": _REQUIRED,
        "r1": _REQUIRED,
        "steps": 50,
        "oracle": False,
        "one_dim": False,
        **_COMMON_DEFAULTS,
    },
    "decay": {
        "omega_c": _REQUIRED,
        "d_min": _REQUIRED,
        "d_max": _REQUIRED,
        "samples": 25,
        "variant": "s1",
        **_COMMON_DEFAULTS,
    },
}


class ConfigError(Exception):
    pass


def _parse_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" in line:
                    key, _, val = line.partition("=")
                else:
                    parts = line.split(None, 1)
                    if len(parts) != 2:
                        raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
                    key, val = parts
                values[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def _coerce(key: str, text: str, like) -> object:
    if isinstance(like, bool):
        low = text.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"config key {key}: expected a boolean, got {text!r}")
    if isinstance(like, int) and not isinstance(like, bool):
        return int(text)
    if isinstance(like, float):
        return float(text)
    return text


def _resolve(command: str, args: argparse.Namespace) -> dict:
    """Merge flags > config file > defaults into a plain dict."""
    defaults = _DEFAULTS[command]
    config = _parse_config_file(args.config) if args.config else {}
    resolved = {}
    for key, default in defaults.items():
        flag_val = getattr(args, key, None)
        if flag_val is not None:
            resolved[key] = flag_val
        elif key in config:
            like = None if default is _REQUIRED or default is None else default
            if like is None:
                # required keys are floats except the string-valued ones
                like = "" if key in ("variant", "orientation", "output", "out") else 0.0
            resolved[key] = _coerce(key, config[key], like)
        elif default is _REQUIRED:
            raise ConfigError(f"missing required option --{key.replace('_', '-')}")
        else:
            resolved[key] = default
    unknown = set(config) - set(defaults)
    if unknown:
        raise ConfigError(f"unknown config keys for '{command}': {sorted(unknown)}")
    return resolved


def _parse_orientation(text: str) -> np.ndarray:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad orientation {text!r}: {exc}") from exc
    if len(parts) != 3:
        raise ConfigError(f"orientation needs 3 comma-separated components, got {text!r}")
    return np.asarray(parts)


def _emit(table: Table, cfg: dict) -> None:
    text = render(table, cfg["output"])
    if cfg["out"]:
        with open(cfg["out"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def _cmd_verify(cfg: dict) -> int:
    rows, passed = run_verify(
        seed=cfg["seed"],
        trials=cfg["trials"],
        tol_algebra=cfg["tol_algebra"],
        tol_eigen=cfg["tol_eigen"],
        tol_kinematics=cfg["tol_kinematics"],
        tol_oracle=cfg["tol_oracle"],
    )
    table = Table(
        columns=["suite", "check", "trials", "max_residual", "tolerance", "status", "note"],
        rows=[[r.suite, r.check, r.trials, r.residual, r.tolerance, r.status, r.note]
              for r in rows],
        meta={
            "command": "verify",
            "seed": cfg["seed"],
            "trials": cfg["trials"],
            "passed": passed,
        },
    )
    _emit(table, cfg)
    n_fail = sum(r.status == "fail" for r in rows)
    n_xfail = sum(r.status == "xfail" for r in rows)
    print(
        f"verify: {'PASS' if passed else 'FAIL'} "
        f"({len(rows)} checks, {n_fail} failed, {n_xfail} known-discrepancy)",
        file=sys.stderr,
    )
    return 0 if passed else 1


def _make_guide(cfg: dict) -> waveguide.WaveguideSpec:
    return waveguide.WaveguideSpec(
        cfg["b1"], cfg["b2"],
        orientation=_parse_orientation(cfg["orientation"]),
        allow_square=cfg["allow_square"],
    )


def _cmd_modes(cfg: dict) -> int:
    spec = _make_guide(cfg)
    listing = waveguide.list_modes(spec, cfg["max_freq"])
    rows = [
        [mode.r, mode.s, wc, waveguide.compton_wavelength(wc)]
        for mode, wc in listing
    ]
    table = Table(
        columns=["r", "s", "cutoff", "compton_wavelength"],
        rows=rows,
        meta={"command": "modes", "b1": cfg["b1"], "b2": cfg["b2"], "max_freq": cfg["max_freq"]},
    )
    _emit(table, cfg)
    return 0


def _cmd_dispersion(cfg: dict) -> int:
    spec = _make_guide(cfg)
    if cfg["steps"] < 1:
        raise ConfigError("steps must be >= 1")
    m = waveguide.lowest_cutoff(spec)
    omegas = np.linspace(cfg["omega_min"], cfg["omega_max"], cfg["steps"])
    rows = []
    for omega in omegas:
        omega = float(omega)
        if omega <= m:
            rows.append([omega, "evanescent", None, None, None, None, None,
                         "evanescent regime -- see propagator command"])
            continue
        st = waveguide.guided_state(spec, omega)
        v = waveguide.velocities(st)
        rows.append([
            omega, "traveling", st.E, st.p_norm,
            float(np.linalg.norm(v.v_g)), float(np.linalg.norm(v.v_p)),
            float(v.v_g @ v.v_p), "",
        ])
    table = Table(
        columns=["omega", "regime", "E", "p_abs", "v_g_abs", "v_p_abs", "vg_dot_vp", "note"],
        rows=rows,
        meta={"command": "dispersion", "b1": cfg["b1"], "b2": cfg["b2"], "cutoff": m},
    )
    _emit(table, cfg)
    return 0


_VARIANTS = {
    "s1": lambda sep, wc: prop.s1_closed(sep, wc),
    "s2": lambda sep, wc: prop.s2_closed(sep, wc),
    "s2full": lambda sep, wc: prop.s2_full_closed(sep, wc),
    "d": lambda sep, wc: prop.d_massless(sep),
}


def _cmd_propagator(cfg: dict) -> int:
    variant = cfg["variant"]
    if variant not in _VARIANTS:
        raise ConfigError(f"unknown variant {variant!r}; expected one of {sorted(_VARIANTS)}")
    if cfg["steps"] < 1:
        raise ConfigError("steps must be >= 1")
    if cfg["one_dim"] and variant != "s1":
        raise ConfigError("--one-dim applies to variant s1 only")
    if cfg["oracle"] and variant not in ("s1", "s2"):
        raise ConfigError("--oracle is available for variants s1 and s2 only")
    if variant != "d" and cfg["omega_c"] is None:
        raise ConfigError("--omega-c is required for this variant")
    wc = cfg["omega_c"] if variant != "d" else None

    n = cfg["steps"]
    ts = np.linspace(cfg["t0"], cfg["t1"], n) if n > 1 else np.array([cfg["t0"]])
    rs = np.linspace(cfg["r0"], cfg["r1"], n) if n > 1 else np.array([cfg["r0"]])
    columns = ["t", "r", "x2", "regime", "variant", "re", "im", "abs"]
    if cfg["oracle"]:
        columns += ["oracle_re", "oracle_im", "rel_err"]
    rows = []
    for t, r in zip(ts, rs):
        t, r = float(t), float(r)
        sep = prop.Separation(t, r)
        name = variant + ("_one_dim" if cfg["one_dim"] else "")
        if sep.regime is prop.Regime.LIGHTLIKE:
            row = [t, r, sep.x2, "lightlike-excluded", name, None, None, None]
            if cfg["oracle"]:
                row += [None, None, None]
            rows.append(row)
            continue
        if cfg["one_dim"]:
            value = prop.s1_closed_one_dim(sep, wc).value
        else:
            value = _VARIANTS[variant](sep, wc).value
        row = [t, r, sep.x2, sep.regime.value, name, value.real, value.imag, abs(value)]
        if cfg["oracle"]:
            try:
                if variant == "s1":
                    ref = (prop.s1_oracle_one_dim(t, r, wc) if cfg["one_dim"]
                           else prop.s1_oracle(t, r, wc))
                else:
                    ref = prop.s2_oracle(t, r, wc)
                row += [ref.real, ref.imag, abs(value - ref) / abs(ref)]
            except ValueError:
                row += [None, None, None]
        rows.append(row)
    table = Table(
        columns=columns,
        rows=rows,
        meta={"command": "propagator", "variant": variant, "omega_c": wc,
              "one_dim": cfg["one_dim"]},
    )
    _emit(table, cfg)
    return 0


def _cmd_decay(cfg: dict) -> int:
    variant = cfg["variant"]
    if variant not in ("s1", "s2", "s2full"):
        raise ConfigError(f"decay supports variants s1/s2/s2full, got {variant!r}")
    if cfg["samples"] < 5:
        raise ConfigError("need at least 5 samples for the fit")
    if not (0 < cfg["d_min"] < cfg["d_max"]):
        raise ConfigError("need 0 < d_min < d_max")
    wc = cfg["omega_c"]
    ds = np.linspace(cfg["d_min"], cfg["d_max"], cfg["samples"])
    samples = [
        (float(d), abs(_VARIANTS[variant](prop.Separation(0.0, float(d)), wc).value))
        for d in ds
    ]
    # all closed forms carry the d^{-3/2} spacelike envelope
    fit = prop.decay_length_fit(samples, envelope_power=1.5)
    compton = 1.0 / wc
    rows = [[
        wc, variant, cfg["d_min"], cfg["d_max"], cfg["samples"],
        fit.rate, fit.decay_length, compton,
        abs(fit.decay_length - compton) / compton, fit.residual,
    ]]
    table = Table(
        columns=["omega_c", "variant", "d_min", "d_max", "samples",
                 "rate", "decay_length", "compton_wavelength",
                 "rel_deviation", "fit_residual"],
        rows=rows,
        meta={"command": "decay"},
    )
    _emit(table, cfg)
    return 0


# ------------------------------------------------------------------ parser

def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--output", choices=["csv", "json"], default=None,
                    help="report format (default csv)")
    sp.add_argument("--out", default=None, help="write the report to a file instead of stdout")
    sp.add_argument("--config", default=None,
                    help="flat key=value config file; flags take precedence")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evanesce",
        description="Guided-photon wave mechanics: identities, mode tables, "
                    "dispersion, propagators, decay lengths.",
        epilog="Config file format: one 'key = value' per line, '#' comments; "
               "keys are long option names with '-' replaced by '_'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="run the numerical identity suites")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--tol-algebra", dest="tol_algebra", type=float, default=None)
    sp.add_argument("--tol-eigen", dest="tol_eigen", type=float, default=None)
    sp.add_argument("--tol-kinematics", dest="tol_kinematics", type=float, default=None)
    sp.add_argument("--tol-oracle", dest="tol_oracle", type=float, default=None)
    _add_common(sp)

    sp = sub.add_parser("modes", help="cutoff table up to a frequency bound")
    sp.add_argument("--b1", type=float, default=None)
    sp.add_argument("--b2", type=float, default=None)
    sp.add_argument("--max-freq", dest="max_freq", type=float, default=None)
    sp.add_argument("--orientation", default=None, help="guide axis, e.g. 0,0,1")
    sp.add_argument("--allow-square", dest="allow_square", action="store_const",
                    const=True, default=None)
    _add_common(sp)

    sp = sub.add_parser("dispersion", help="dispersion/velocity table over a frequency grid")
    sp.add_argument("--b1", type=float, default=None)
    sp.add_argument("--b2", type=float, default=None)
    sp.add_argument("--omega-min", dest="omega_min", type=float, default=None)
    sp.add_argument("--omega-max", dest="omega_max", type=float, default=None)
    sp.add_argument("--steps", type=int, default=None)
    sp.add_argument("--orientation", default=None)
    sp.add_argument("--allow-square", dest="allow_square", action="store_const",
                    const=True, default=None)
    _add_common(sp)

    sp = sub.add_parser("propagator", help="propagator values along a (t, r) ray")
    sp.add_argument("--omega-c", dest="omega_c", type=float, default=None)
    sp.add_argument("--variant", choices=sorted(_VARIANTS), default=None)
    sp.add_argument("--t0", type=float, default=None)
    sp.add_argument("--t1", type=float, default=None)
    sp.add_argument("--r0", type=float, default=None)
    sp.add_argument("--r1", type=float, default=None)
    sp.add_argument("--steps", type=int, default=None)
    sp.add_argument("--oracle", action="store_const", const=True, default=None,
                    help="add quadrature cross-check columns")
    sp.add_argument("--one-dim", dest="one_dim", action="store_const", const=True,
                    default=None, help="axial-measure variant (s1 only)")
    _add_common(sp)

    sp = sub.add_parser("decay", help="fit the space-like decay length")
    sp.add_argument("--omega-c", dest="omega_c", type=float, default=None)
    sp.add_argument("--d-min", dest="d_min", type=float, default=None)
    sp.add_argument("--d-max", dest="d_max", type=float, default=None)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--variant", choices=["s1", "s2", "s2full"], default=None)
    _add_common(sp)

    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "modes": _cmd_modes,
    "dispersion": _cmd_dispersion,
    "propagator": _cmd_propagator,
    "decay": _cmd_decay,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve(args.command, args)
        return _COMMANDS[args.command](cfg)
    except (ConfigError, ValueError) as exc:
        print(f"evanesce {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands expose the experiment drivers with machine-readable CSV/JSON
output suitable for plotting and golden-file testing. Output is
deterministic: identical configuration and seed produce byte-identical
files. CSV numbers carry 15 significant digits with LF line endings.

Exit codes: 0 success, 1 configuration error, 2 output I/O error,
3 no-signaling audit failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import audit as audit_mod
from . import states
from .experiments import (
    DEFAULT_CHSH_ANGLES,
    chsh,
    fringe_visibility,
    rto_joint,
)
from .optics import PhaseSettings
from .stochastics import estimate_correlation, sample_events

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_AUDIT_FAIL = 3

_INV_SQRT2 = math.sqrt(0.5)


class ConfigError(Exception):
    """Raised for any invalid configuration; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on parse errors; route through
    # ConfigError instead so bad config is always exit code 1.
    def error(self, message):
        raise ConfigError(message)


@dataclass
class RunConfig:
    """Validated inputs shared by the subcommands."""

    subcommand: str
    c1: complex
    c2: complex
    phi_start: float
    phi_stop: float
    points: int
    seed: int
    trials: int
    gamma: float | None
    fmt: str
    out: str | None
    extras: dict = field(default_factory=dict)

    def phase_grid(self) -> np.ndarray:
        return np.linspace(self.phi_start, self.phi_stop, self.points)


def _fmt(value: float) -> str:
    return format(float(value), ".15g")


def _amplitude(mag: float, phase: float) -> complex:
    return mag * complex(math.cos(phase), math.sin(phase))


def _config_from(args) -> RunConfig:
    c1 = _amplitude(args.c1_mag, args.c1_phase)
    c2 = _amplitude(args.c2_mag, args.c2_phase)
    dev = abs(abs(c1) ** 2 + abs(c2) ** 2 - 1.0)
    if dev > 1e-9:
        raise ConfigError(
            f"amplitudes are not normalised: |c1|^2 + |c2|^2 deviates from 1 by {dev:.3e}"
        )
    points = int(args.points)
    if points < 1:
        raise ConfigError(f"--points must be at least 1, got {points}")
    trials = int(args.trials)
    if trials < 0:
        raise ConfigError(f"--trials must be non-negative, got {trials}")
    gamma = getattr(args, "gamma", None)
    if gamma is not None and not (0.0 <= gamma <= 1.0):
        raise ConfigError(f"--gamma must lie in [0, 1], got {gamma}")
    for name in ("phi_start", "phi_stop"):
        if not math.isfinite(getattr(args, name)):
            raise ConfigError(f"--{name.replace('_', '-')} must be finite")
    return RunConfig(
        subcommand=args.subcommand,
        c1=c1,
        c2=c2,
        phi_start=float(args.phi_start),
        phi_stop=float(args.phi_stop),
        points=points,
        seed=int(args.seed),
        trials=trials,
        gamma=gamma,
        fmt=args.format,
        out=args.out,
    )


def _csv_text(header: list[str], rows: list[list[float]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_rto_sweep(config: RunConfig) -> tuple[str, int]:
    """Correlation fringe sweep over the phase difference."""
    sampled = config.trials > 0
    header = ["phi_diff", "E_exact", "p_agree"]
    if sampled:
        header += ["E_hat", "stderr"]
    rows = []
    for index, phi in enumerate(config.phase_grid()):
        joint = rto_joint(PhaseSettings(float(phi), 0.0), config.c1, config.c2)
        row = [float(phi), joint.correlation(), joint.agreement()]
        if sampled:
            est = estimate_correlation(
                sample_events(joint, config.trials, config.seed, stream_index=index)
            )
            row += [est.e_hat, est.stderr]
        rows.append(row)
    if config.fmt == "csv":
        return _csv_text(header, rows), EXIT_OK
    keys = ["phi_diff", "e_exact", "p_agree"] + (["e_hat", "stderr"] if sampled else [])
    return _json_text([dict(zip(keys, row)) for row in rows]), EXIT_OK


def cmd_chsh(config: RunConfig) -> tuple[str, int]:
    """CHSH combination at four analyzer angles."""
    a, a_prime, b, b_prime = config.extras["angles"]
    def corr(x, y):
        return rto_joint(PhaseSettings(x, y), config.c1, config.c2).correlation()

    e_values = {
        "ab": corr(a, b),
        "ab_prime": corr(a, b_prime),
        "a_prime_b": corr(a_prime, b),
        "a_prime_b_prime": corr(a_prime, b_prime),
    }
    s_value = chsh(a, a_prime, b, b_prime, config.c1, config.c2)
    payload = {
        "angles": {"a": a, "a_prime": a_prime, "b": b, "b_prime": b_prime},
        "e_values": e_values,
        "s_value": s_value,
        "violates": bool(s_value > 2.0),
    }
    return _json_text(payload), EXIT_OK


def cmd_visibility(config: RunConfig) -> tuple[str, int]:
    """Fringe visibility and local coherence across pointer overlaps."""
    if config.gamma is not None:
        grid = np.array([config.gamma])
    else:
        start, stop = config.extras["gamma_start"], config.extras["gamma_stop"]
        grid = np.linspace(start, stop, config.points)
    rows = []
    for gamma in grid:
        visibility = fringe_visibility(float(gamma), config.c1, config.c2)
        reduced = states.local_state(
            states.make_measurement_state(config.c1, config.c2, float(gamma)), "S"
        )
        rows.append([float(gamma), visibility, states.coherence(reduced)])
    if config.fmt == "csv":
        return _csv_text(["gamma", "visibility", "coherence"], rows), EXIT_OK
    keys = ["gamma", "visibility", "coherence"]
    return _json_text([dict(zip(keys, row)) for row in rows]), EXIT_OK


def cmd_nosignal(config: RunConfig) -> tuple[str, int]:
    """No-signaling audit; exit 3 when the audit fails."""
    side = config.extras["side"]
    local_phase = config.extras["local_phase"]
    joint_fn = None
    fixture = config.extras.get("fault_fixture")
    if fixture is not None:
        joint_fn = audit_mod.phase_biased_joint(
            side, fixture["amplitude"], config.c1, config.c2
        )
    grid = config.phase_grid()
    if config.trials > 0:
        report = audit_mod.audit_sampled(
            side,
            grid,
            config.trials,
            config.seed,
            config.c1,
            config.c2,
            local_phase=local_phase,
            joint_fn=joint_fn,
        )
    else:
        report = audit_mod.audit_exact(
            side, local_phase, grid, config.c1, config.c2, joint_fn=joint_fn
        )
    code = EXIT_OK if report.passed else EXIT_AUDIT_FAIL
    return _json_text(report.as_dict()), code


def _parse_state_spec(config: RunConfig) -> states.BipartitePureState:
    inline = config.extras.get("state")
    state_file = config.extras.get("state_file")
    if inline is not None and state_file is not None:
        raise ConfigError("give either --state or --state-file, not both")
    if inline is None and state_file is None:
        gamma = config.gamma if config.gamma is not None else 0.0
        return states.make_measurement_state(config.c1, config.c2, gamma)

    if state_file is not None:
        try:
            with open(state_file, "r", encoding="utf-8") as fh:
                spec = json.load(fh)
            dims = tuple(int(d) for d in spec["dims"])
            pairs = [(float(m), float(p)) for m, p in spec["amps"]]
        except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read state file {state_file}: {exc}") from exc
    else:
        try:
            dims_text = config.extras.get("dims", "2x2")
            dims = tuple(int(d) for d in dims_text.lower().split("x"))
            pairs = []
            for chunk in inline.split(","):
                mag_text, phase_text = chunk.split(":")
                pairs.append((float(mag_text), float(phase_text)))
        except ValueError as exc:
            raise ConfigError(f"malformed state spec: {exc}") from exc
    if len(dims) != 2:
        raise ConfigError(f"dims must name two subsystems, got {dims}")
    amps = [_amplitude(mag, phase) for mag, phase in pairs]
    try:
        return states.BipartitePureState(dims=(dims[0], dims[1]), vector=np.array(amps))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_schmidt(config: RunConfig) -> tuple[str, int]:
    """Biorthogonal decomposition of a bipartite state."""
    psi = _parse_state_spec(config)
    form = states.schmidt(psi)
    payload = {
        "coeffs": [float(c) for c in form.coeffs],
        "degenerate": form.degenerate,
        "reconstruction_error": form.reconstruction_error(psi),
    }
    return _json_text(payload), EXIT_OK


_COMMANDS = {
    "rto-sweep": cmd_rto_sweep,
    "chsh": cmd_chsh,
    "visibility": cmd_visibility,
    "nosignal": cmd_nosignal,
    "schmidt": cmd_schmidt,
}


def _add_common(parser: argparse.ArgumentParser, default_points: int) -> None:
    parser.add_argument("--c1-mag", type=float, default=_INV_SQRT2, help="magnitude of c1")
    parser.add_argument("--c1-phase", type=float, default=0.0, help="phase of c1 (radians)")
    parser.add_argument("--c2-mag", type=float, default=_INV_SQRT2, help="magnitude of c2")
    parser.add_argument("--c2-phase", type=float, default=0.0, help="phase of c2 (radians)")
    parser.add_argument("--phi-start", type=float, default=0.0, help="phase grid start (radians)")
    parser.add_argument("--phi-stop", type=float, default=math.pi, help="phase grid stop (radians)")
    parser.add_argument("--points", type=int, default=default_points, help="grid point count")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed for sampled runs")
    parser.add_argument("--trials", type=int, default=0, help="samples per grid point; 0 = exact only")
    parser.add_argument("--format", choices=("csv", "json"), default=None, help="output format")
    parser.add_argument("--out", type=str, default=None, help="output path; default stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twophoton", description="Two-photon entanglement experiments")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sweep = sub.add_parser("rto-sweep", help="correlation fringe over the phase difference")
    _add_common(sweep, default_points=25)

    bell = sub.add_parser("chsh", help="CHSH combination at four analyzer angles")
    _add_common(bell, default_points=1)
    bell.add_argument(
        "--angles",
        type=float,
        nargs=4,
        metavar=("A", "A_PRIME", "B", "B_PRIME"),
        default=list(DEFAULT_CHSH_ANGLES),
        help="analyzer angles a a' b b' (radians)",
    )

    vis = sub.add_parser("visibility", help="fringe visibility across pointer overlaps")
    _add_common(vis, default_points=11)
    vis.add_argument("--gamma", type=float, default=None, help="single pointer overlap in [0, 1]")
    vis.add_argument("--gamma-start", type=float, default=0.0, help="overlap grid start")
    vis.add_argument("--gamma-stop", type=float, default=1.0, help="overlap grid stop")

    nosig = sub.add_parser("nosignal", help="no-signaling audit of local statistics")
    _add_common(nosig, default_points=25)
    nosig.set_defaults(phi_stop=2.0 * math.pi)
    nosig.add_argument("--side", choices=("S", "A"), default="A", help="audited side")
    nosig.add_argument("--local-phase", type=float, default=0.0, help="audited side's own phase")
    nosig.add_argument(
        "--fault-fixture",
        type=str,
        default=None,
        help="JSON file {'amplitude': x} injecting a remote-phase marginal bias",
    )

    dec = sub.add_parser("schmidt", help="biorthogonal decomposition of a bipartite state")
    _add_common(dec, default_points=1)
    dec.add_argument("--gamma", type=float, default=None, help="pointer overlap for the built state")
    dec.add_argument("--state", type=str, default=None, help="inline amplitudes mag:phase,mag:phase,...")
    dec.add_argument("--dims", type=str, default="2x2", help="dimensions of the inline state, e.g. 2x3")
    dec.add_argument("--state-file", type=str, default=None, help="JSON state file {dims, amps}")
    return parser


def _load_fixture(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        amplitude = float(raw["amplitude"])
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read fault fixture {path}: {exc}") from exc
    return {"amplitude": amplitude}


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from(args)
        if config.fmt is None:
            config.fmt = "csv" if config.subcommand in ("rto-sweep", "visibility") else "json"
        if config.subcommand in ("chsh", "nosignal", "schmidt") and config.fmt != "json":
            raise ConfigError(f"{config.subcommand} only supports --format json")
        if config.subcommand == "chsh":
            config.extras["angles"] = tuple(float(x) for x in args.angles)
        elif config.subcommand == "visibility":
            config.extras["gamma_start"] = float(args.gamma_start)
            config.extras["gamma_stop"] = float(args.gamma_stop)
            for name in ("gamma_start", "gamma_stop"):
                value = config.extras[name]
                if not (0.0 <= value <= 1.0):
                    raise ConfigError(f"--{name.replace('_', '-')} must lie in [0, 1], got {value}")
        elif config.subcommand == "nosignal":
            config.extras["side"] = args.side
            config.extras["local_phase"] = float(args.local_phase)
            if args.fault_fixture is not None:
                config.extras["fault_fixture"] = _load_fixture(args.fault_fixture)
            if config.trials and config.trials < audit_mod.MIN_TRIALS_PER_POINT:
                raise ConfigError(
                    f"--trials must be 0 (exact) or at least {audit_mod.MIN_TRIALS_PER_POINT}"
                )
        elif config.subcommand == "schmidt":
            for key in ("state", "state_file"):
                value = getattr(args, key)
                if value is not None:
                    config.extras[key] = value
            config.extras["dims"] = args.dims
        text, code = _COMMANDS[config.subcommand](config)
    except ConfigError as exc:
        print(f"twophoton: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        _write_output(text, config.out)
    except OSError as exc:
        print(f"twophoton: cannot write {config.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

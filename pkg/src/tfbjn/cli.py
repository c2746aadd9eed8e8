"""Command-line front end: ``tfbjn gen|transform|metrics|quantize``.

Exit codes: 0 success, 2 usage or configuration error, 3 I/O or input
format error, 4 size guard.  Every command writes fixed-format output
(``%.17g`` floats, sorted JSON keys) so identical inputs give identical
bytes.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .cohen import bjd
from .errors import FormatError, InvalidArgument, SizeGuardError, UndefinedRatioError
from .metrics import (
    Box,
    concentration,
    cross_term_energy,
    marginals,
    midpoint_box,
    moyal_defect,
    reference_marginals,
    rel_l1,
    report_json,
)
from .quantize import monomial_coeffs
from .signal import (
    GaussAtom,
    Signal,
    analytic,
    gen_gaussian,
    gen_linear_chirp,
    load_signal_csv,
    save_signal_csv,
)
from .spectral import Axis, Grid2D
from .wigner import TFDist, wigner

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_GUARD = 0, 2, 3, 4

# the direct ambiguity sum is O(N^3); beyond this it is not a desk computation
MAX_TRANSFORM_N = 4096


class ConfigError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# ---------------------------------------------------------------------------
# configuration


def preset_names() -> list:
    root = resources.files("tfbjn") / "presets"
    return sorted(p.name[: -len(".cfg")] for p in root.iterdir() if p.name.endswith(".cfg"))


def preset_text(name: str) -> str:
    path = resources.files("tfbjn") / "presets" / f"{name}.cfg"
    if not path.is_file():
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return path.read_text()


def _float(section, key, default=None):
    if key not in section:
        if default is None:
            raise ConfigError(f"[{section.name}] is missing {key!r}")
        return default
    try:
        return float(section[key])
    except ValueError:
        raise ConfigError(f"[{section.name}] {key} = {section[key]!r} is not a number") from None


def parse_config(text: str) -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config: {exc}") from None
    if not cp.has_section("signal"):
        raise ConfigError("config needs a [signal] section")
    for name in cp.sections():
        if name not in ("signal", "box") and not name.startswith(("gauss.", "chirp.")):
            raise ConfigError(f"unknown section [{name}]")
    return cp


def signal_from_config(cp: configparser.ConfigParser) -> Signal:
    sec = cp["signal"]
    try:
        n = int(sec.get("n", ""))
    except ValueError:
        raise ConfigError("[signal] n must be an integer") from None
    fs = _float(sec, "sample_rate")
    t0 = float(sec["t0"]) if "t0" in sec else None
    parts = []
    try:
        zero = Signal(np.zeros(n), fs, t0)
        for name in cp.sections():
            s = cp[name]
            if name.startswith("gauss."):
                atom = GaussAtom(
                    _float(s, "t_center", 0.0),
                    _float(s, "f_center", 0.0),
                    _float(s, "spread", 1.0),
                    _float(s, "amplitude", 1.0),
                )
                parts.append(gen_gaussian(atom, n, fs, zero.t0).samples)
            elif name.startswith("chirp."):
                c = gen_linear_chirp(_float(s, "f_start"), _float(s, "f_end"), n, fs, zero.t0)
                v = c.samples * _float(s, "amplitude", 1.0)
                if "envelope_spread" in s:
                    tc = _float(s, "envelope_center", 0.0)
                    spread = _float(s, "envelope_spread")
                    if not spread > 0:
                        raise ConfigError(f"[{name}] envelope_spread must be positive")
                    v = v * np.exp(-np.pi * ((c.times - tc) / spread) ** 2)
                parts.append(v)
    except InvalidArgument as exc:
        raise ConfigError(str(exc)) from None
    samples = np.sum(parts, axis=0) if parts else zero.samples
    sig = Signal(samples, fs, zero.t0, label=sec.get("name", "signal"))
    if sec.getboolean("analytic", fallback=False):
        sig = analytic(sig)
    return sig


def box_from_config(cp: configparser.ConfigParser):
    """Explicit [box], else the midpoint box of exactly two Gaussian atoms, else None."""
    if cp.has_section("box"):
        b = cp["box"]
        try:
            return Box(_float(b, "t_lo"), _float(b, "t_hi"), _float(b, "f_lo"), _float(b, "f_hi"))
        except InvalidArgument as exc:
            raise ConfigError(str(exc)) from None
    atoms = [cp[s] for s in cp.sections() if s.startswith("gauss.")]
    if len(atoms) == 2 and not any(s.startswith("chirp.") for s in cp.sections()):
        a, b = (
            GaussAtom(_float(x, "t_center", 0.0), _float(x, "f_center", 0.0), _float(x, "spread", 1.0))
            for x in atoms
        )
        return midpoint_box(a, b)
    return None


def parse_box(text: str) -> Box:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise ConfigError(f"--box expects t_lo,t_hi,f_lo,f_hi, got {text!r}") from None
    if len(vals) != 4:
        raise ConfigError(f"--box expects four numbers, got {text!r}")
    try:
        return Box(*vals)
    except InvalidArgument as exc:
        raise ConfigError(str(exc)) from None


def _load_config_arg(args):
    if args.preset and args.config:
        raise ConfigError("give either --preset or --config, not both")
    if args.preset:
        return parse_config(preset_text(args.preset))
    if args.config:
        return parse_config(Path(args.config).read_text())
    return None


# ---------------------------------------------------------------------------
# TF grid files


def write_tf_csv(d: TFDist, path) -> None:
    g = d.grid
    n1, n2 = g.shape
    lines = [
        f"# kind={d.kind} n={d.order} lattice={d.lattice}",
        f"# axis1 start={_fmt(g.axis1.start)} step={_fmt(g.axis1.step)} unit={g.axis1.unit} size={n1}",
        f"# axis2 start={_fmt(g.axis2.start)} step={_fmt(g.axis2.step)} unit={g.axis2.unit} size={n2}",
    ]
    v = g.values
    re_, im_ = np.real(v), np.imag(v)
    for i in range(n1):
        for j in range(n2):
            lines.append(f"{i},{j},{_fmt(re_[i, j])},{_fmt(im_[i, j])}")
    Path(path).write_text("\n".join(lines) + "\n")


def _header_fields(line: str, lineno: int) -> dict:
    if not line.startswith("#"):
        raise FormatError("expected a '#' header line", line=lineno)
    tokens = line[1:].split()
    if tokens and "=" not in tokens[0]:
        tokens = tokens[1:]  # axis name
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise FormatError(f"bad header token {tok!r}", line=lineno)
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def read_tf_csv(path) -> TFDist:
    lines = Path(path).read_text().splitlines()
    if len(lines) < 3:
        raise FormatError("missing header", line=len(lines) + 1)
    meta = _header_fields(lines[0], 1)
    axes = []
    for idx in (1, 2):
        h = _header_fields(lines[idx], idx + 1)
        try:
            axes.append((Axis(float(h["start"]), float(h["step"]), h.get("unit", "")), int(h["size"])))
        except (KeyError, ValueError):
            raise FormatError("axis header needs start, step, unit and size", line=idx + 1) from None
    (a1, n1), (a2, n2) = axes
    values = np.empty((n1, n2), dtype=np.complex128)
    count = 0
    for lineno, line in enumerate(lines[3:], start=4):
        if not line.strip():
            continue
        parts = line.split(",")
        try:
            i, j = int(parts[0]), int(parts[1])
            values[i, j] = complex(float(parts[2]), float(parts[3]))
        except (ValueError, IndexError):
            raise FormatError(f"cannot parse row {line!r}", line=lineno) from None
        if i * n2 + j != count:
            raise FormatError("rows out of order", line=lineno)
        count += 1
    if count != n1 * n2:
        raise FormatError(f"expected {n1 * n2} rows, got {count}", line=len(lines))
    order = None if meta.get("n") in (None, "None") else int(meta["n"])
    return TFDist(Grid2D(values, a1, a2), meta.get("kind", "wigner"), order, (), meta.get("lattice", "standard"))


def pgm_bytes(d: TFDist):
    """16-bit binary PGM of the real part: columns = time, rows = frequency (high at top)."""
    v = np.real(d.values)
    lo, hi = float(v.min()), float(v.max())
    span = hi - lo
    scaled = np.zeros_like(v) if span == 0 else (v - lo) / span * 65535.0
    img = np.rint(scaled).astype(">u2").T[::-1]
    height, width = img.shape
    header = f"P5\n{width} {height}\n65535\n".encode("ascii")
    return header + img.tobytes(), lo, hi


def tf_meta(d: TFDist, box=None) -> dict:
    g = d.grid
    meta = {
        "kind": d.kind,
        "n": d.order,
        "lattice": d.lattice,
        "time_axis": {"start": g.axis1.start, "step": g.axis1.step, "size": g.shape[0], "unit": g.axis1.unit},
        "freq_axis": {"start": g.axis2.start, "step": g.axis2.step, "size": g.shape[1], "unit": g.axis2.unit},
        "min": float(np.real(d.values).min()),
        "max": float(np.real(d.values).max()),
        "total_energy": float(np.sum(np.real(d.values)) * g.cell),
        "imag_residue": d.imag_residue(),
    }
    if box is not None:
        meta["box"] = {"t_lo": box.t_lo, "t_hi": box.t_hi, "f_lo": box.f_lo, "f_hi": box.f_hi}
        meta["box_energy"] = cross_term_energy(d, box)
    return meta


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# commands


def _input_signal(args) -> Signal:
    sig = load_signal_csv(args.input)
    if args.analytic:
        sig = analytic(sig)
    if len(sig) > MAX_TRANSFORM_N:
        raise SizeGuardError(f"signal length {len(sig)} exceeds the cap of {MAX_TRANSFORM_N}")
    return sig


def _box_arg(args):
    if args.box:
        return parse_box(args.box)
    cp = _load_config_arg(args)
    return box_from_config(cp) if cp is not None else None


def _order(n) -> int:
    if n < 0:
        raise ConfigError(f"order n must be >= 0, got {n}")
    return n


def cmd_gen(args) -> int:
    cp = _load_config_arg(args)
    if cp is None:
        raise ConfigError("gen needs --preset or --config")
    sig = signal_from_config(cp)
    if args.analytic:
        sig = analytic(sig)
    save_signal_csv(sig, args.output)
    return EXIT_OK


def cmd_transform(args) -> int:
    n = _order(args.n)
    box = _box_arg(args)
    sig = _input_signal(args)
    d = wigner(sig) if args.kind == "wigner" else bjd(sig, n)
    out = Path(args.output)
    if args.format == "csv":
        write_tf_csv(d, out)
    elif args.format == "pgm":
        data, _, _ = pgm_bytes(d)
        out.write_bytes(data)
        out.with_suffix(".json").write_text(_dump_json(tf_meta(d, box)))
    else:
        out.write_text(_dump_json(tf_meta(d, box)))
    return EXIT_OK


def _parse_n_list(text: str) -> list:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"--n-list expects comma-separated integers, got {text!r}") from None
    if not vals or any(v < 0 for v in vals):
        raise ConfigError(f"--n-list needs non-negative integers, got {text!r}")
    return sorted(set(vals))


def metric_rows(sig: Signal, n_list, box=None, signal_id="signal") -> list:
    rows = []
    ref_t, ref_f = reference_marginals(sig)
    for n in n_list:
        d = bjd(sig, n)
        mt, mf = marginals(d)
        values = {
            "marginal_time_rel_l1": rel_l1(mt, ref_t),
            "marginal_freq_rel_l1": rel_l1(mf, ref_f),
            "total_energy": float(np.sum(np.real(d.values)) * d.grid.cell),
        }
        try:
            values["moyal_defect"] = moyal_defect(sig, sig, n)
        except UndefinedRatioError:
            values["moyal_defect"] = None
        try:
            values["concentration"] = concentration(d)
        except UndefinedRatioError:
            values["concentration"] = None
        if box is not None:
            values["cross_term_energy"] = cross_term_energy(d, box)
        for metric, value in values.items():
            rows.append({"signal_id": signal_id, "n": n, "metric": metric, "value": value})
    return rows


def cmd_metrics(args) -> int:
    n_list = _parse_n_list(args.n_list)
    box = _box_arg(args)
    sig = _input_signal(args)
    rows = metric_rows(sig, n_list, box, signal_id=Path(args.input).stem)
    Path(args.output).write_text(report_json(rows) + "\n")
    return EXIT_OK


def cmd_quantize(args) -> int:
    for name in ("m", "l", "n"):
        if getattr(args, name) < 0:
            raise ConfigError(f"{name} must be >= 0")
    table = monomial_coeffs(args.m, args.l, args.n)
    Path(args.output).write_text(table.to_json() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tfbjn", description="Born-Jordan distributions of order n.")
    sub = p.add_subparsers(dest="command", required=True)

    def source(sp):
        sp.add_argument("--preset", help=f"built-in config ({', '.join(preset_names())})")
        sp.add_argument("--config", help="path to a config file")

    g = sub.add_parser("gen", help="generate a signal CSV from a preset or config")
    source(g)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--analytic", action="store_true", help="keep only the positive spectrum of the real part")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="compute a time-frequency distribution")
    t.add_argument("input")
    t.add_argument("--kind", choices=("wigner", "bjd"), default="bjd")
    t.add_argument("-n", type=int, default=1, help="order (ignored for wigner)")
    t.add_argument("-o", "--output", required=True)
    t.add_argument("--format", choices=("csv", "pgm", "json-meta"), default="csv")
    t.add_argument("--box", help="t_lo,t_hi,f_lo,f_hi for the box energy")
    t.add_argument("--analytic", action="store_true")
    source(t)
    t.set_defaults(func=cmd_transform)

    m = sub.add_parser("metrics", help="metric report over a list of orders")
    m.add_argument("input")
    m.add_argument("--n-list", default="0,1,2")
    m.add_argument("-o", "--output", required=True)
    m.add_argument("--box", help="t_lo,t_hi,f_lo,f_hi for the cross-term energy")
    m.add_argument("--analytic", action="store_true")
    source(m)
    m.set_defaults(func=cmd_metrics)

    q = sub.add_parser("quantize", help="exact ordering coefficients of w^m x^l")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(func=cmd_quantize)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, InvalidArgument) as exc:
        print(f"tfbjn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError) as exc:
        print(f"tfbjn: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SizeGuardError as exc:
        print(f"tfbjn: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 on success, 2 when a cross-check disagrees (MismatchError or a
failed acceptance criterion), 1 for usage and other errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .assembly import full_gv
from .checks import run_all
from .errors import GVError, MismatchError
from .gvbasis import GVSpectrum
from .gwside import bp_t2_coefficient, extract_gw_gv
from .higgs import euler_mhat, higgs_spectrum
from .homfly import homfly_t2, specialize_a0
from .intersect import chern_from_ch, degeneracy_euler, grr_push
from .localgv import SpectralType, hilb_series, local_gv, spectral_euler
from .partitions import as_partition
from .strata import stratum_table

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not out or any(v <= 0 for v in out):
        raise argparse.ArgumentTypeError("entries must be positive integers")
    return out


def _spectrum_lines(label: str, spec: GVSpectrum) -> list[str]:
    lines = [f"{label}:"]
    rows = [(g, str(g), str(n)) for g, n in spec.values.items()]
    if spec.unknown:
        lo, hi = spec.unknown
        rows.append((hi, str(hi) if lo == hi else f"{lo}..{hi}", "unknown"))
    if not rows:
        return lines + ["  0 at every g"]
    for _, label, text in sorted(rows, reverse=True):
        lines.append(f"  g={label:<6} {text}")
    return lines + ["  (0 at every other g)"]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_homfly(args) -> int:
    frac = homfly_t2(args.n)
    payload = {"n": args.n, "homfly": frac.to_text()}
    lines = [f"P(T_2,{args.n}) = {frac.to_text()}"]
    if args.n >= 1:
        spec = specialize_a0(args.n)
        text = spec.to_text(args.n - 1)
        payload["specialization"] = text
        payload["pole_order"] = spec.pole_order
        lines.append(f"[(q/a)^{args.n - 1} P]_(a=0) = {text}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_contrib(args) -> int:
    t = SpectralType(as_partition(args.partition), args.base_genus)
    series = hilb_series(t)
    spec = local_gv(t)
    payload = {
        "partition": list(t.partition),
        "base_genus": t.base_genus,
        "spectral_euler": spectral_euler(t),
        "hilb_series": series.to_text(),
        "spectrum": spec.to_dict(),
    }
    lines = [
        f"lambda = {t.partition}, g(C) = {t.base_genus}, chi(C_a) = {spectral_euler(t)}",
        f"hilb_series = {series.to_text()}",
    ] + _spectrum_lines("n_g(lambda)", spec)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_strata(args) -> int:
    table = stratum_table(args.base_genus)
    payload = {"base_genus": args.base_genus, "strata": table.to_dict(), "total": table.total()}
    width = max(len(",".join(map(str, lam))) for lam in table.entries) + 2
    lines = [f"{'lambda':<{width}}{'e(Z)':>8}{'e(D)':>8}{'e(S_lambda)':>14}"]
    for lam, value in table.entries.items():
        ci = table.inputs.get(lam)
        z = str(ci.euler_Z) if ci else "-"
        d = str(ci.euler_D) if ci else "-"
        lines.append(f"{','.join(map(str, lam)):<{width}}{z:>8}{d:>8}{value:>14}")
    lines.append(f"{'sum':<{width}}{'':>16}{table.total():>14}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    data = grr_push(args.weights, args.degL2, args.genus)
    payload = {"weights": args.weights, "genus": args.genus, "degL2": args.degL2, "rank": data.rank}
    lines = [f"rank = {data.rank}"]
    payload["ch"] = {}
    for k, ch in enumerate(data.ch):
        payload["ch"][str(k)] = ch.to_text()
        lines.append(f"ch_{k} = {ch.to_text()}")
    arity = len(args.weights)
    chern = chern_from_ch(data, arity)
    payload["c"] = {}
    for k, c in enumerate(chern, start=1):
        payload["c"][str(k)] = c.to_text()
        lines.append(f"c_{k} = {c.to_text()}")
    if arity == 3:
        e = degeneracy_euler(data)
        payload["euler_Z"] = e
        lines.append(f"e(Z) = {e}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_higgs(args) -> int:
    res = higgs_spectrum(args.base_genus)
    payload = res.to_dict()
    payload["euler_mhat"] = euler_mhat(args.base_genus)
    lines = [f"e(M^) = {payload['euler_mhat']}"] + _spectrum_lines("n_g(Tot_C(L))", res.spectrum)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_gw(args) -> int:
    degree1, degree2 = extract_gw_gv(args.base_genus)
    bp = bp_t2_coefficient(args.base_genus)
    payload = {
        "base_genus": args.base_genus,
        "degree1": degree1.to_dict(),
        "degree2": degree2.to_dict(),
    }
    # the w-polynomial shares the q text layout; print with w
    lines = [f"t^2 coefficient (w = Q^1/2 - Q^-1/2): {_w_text(bp)}"]
    lines += _spectrum_lines("degree 1", degree1) + _spectrum_lines("degree 2", degree2)
    _emit(args, payload, lines)
    return EXIT_OK


def _w_text(p) -> str:
    terms = []
    for e, c in sorted(p.items(), reverse=True):
        mono = "" if e == 0 else ("w" if e == 1 else f"w^{e}")
        coef = str(c) if (abs(c) != 1 or not mono) else ("-" if c < 0 else "")
        terms.append(f"{coef}{mono}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def cmd_full(args) -> int:
    res = full_gv(args.base_genus)
    lines = (
        _spectrum_lines("n_g(U_eps)", res.nearby)
        + _spectrum_lines("n_g(Tot_C(L))", res.higgs_side)
        + _spectrum_lines("n_g,2[C](Tot_C(N))", res.total)
        + _spectrum_lines("GW side", res.gw_side)
    )
    for g, term in sorted(res.symbolic.items()):
        lines.append(f"n_{g}(U_eps) = {term.to_text()}")
    lines.append("match at every determined g: " + ("yes" if res.all_match else "no"))
    _emit(args, res.to_dict(), lines)
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_all()
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gvcurves", description="Degree-two GV invariants of local curves")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="print JSON instead of a table")
        p.set_defaults(func=fn)
        return p

    p = add("homfly", cmd_homfly, "HOMFLY polynomial of T(2,n) and its a=0 specialization")
    p.add_argument("--n", type=int, required=True)
    p = add("contrib", cmd_contrib, "local GV contribution of a singularity type")
    p.add_argument("--partition", type=_int_list, required=True)
    p.add_argument("--base-genus", type=int, required=True)
    p = add("strata", cmd_strata, "Euler characteristics of the strata (base genus 2)")
    p.add_argument("--base-genus", type=int, default=2)
    p = add("degeneracy", cmd_degeneracy, "GRR pushforward and degeneracy locus Euler characteristic")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degL2", type=int, required=True)
    p = add("higgs", cmd_higgs, "twisted Higgs side")
    p.add_argument("--base-genus", type=int, required=True)
    p = add("gw", cmd_gw, "GW side in degrees one and two")
    p.add_argument("--base-genus", type=int, required=True)
    p = add("full", cmd_full, "total degree-two spectrum with GW cross-check")
    p.add_argument("--base-genus", type=int, required=True)
    add("check", cmd_check, "run every acceptance check")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MismatchError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (GVError, ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

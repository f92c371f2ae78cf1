"""Command-line surface: every construction as a subcommand over structured
text documents on standard streams or files.

Exit codes: 0 success, 1 mathematical violation, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from . import io as gio
from .correspondence import (
    A1_ONE,
    A1_ZERO,
    CorrespondenceError,
    LagrangianData,
    dim_report,
    dualize,
    gm_to_lagrangian,
    hyperplane_section_lagrangian,
    lagrangian_to_gm,
)
from .epw import stratum_poly_on_line, y_dual_stratum, y_stratum, z_stratum
from .exterior import MultiVector
from .fibrations import fibration1_fiber, fibration2_fiber, sigma1_level, sigma2_level
from .fixtures import all_gm_fixtures, all_lagrangian_fixtures
from .gm import GmError, discriminant_on_line, hull_point_sample, opposite, validate
from .io import Document, DocumentError
from .linalg import Matrix, Subspace, kernel

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _parse_scalar_list(text: str, where: str) -> list[Fraction]:
    out = []
    for i, tok in enumerate(text.split(",")):
        try:
            out.append(Fraction(tok.strip()))
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: bad rational {tok.strip()!r} at position {i}") from None
    return out


def _parse_point6(text: str, where: str = "--point") -> list[Fraction]:
    v = _parse_scalar_list(text, where)
    if len(v) != 6:
        raise DocumentError(f"{where}: expected 6 coordinates, got {len(v)}")
    return v


def _parse_plane(text: str, where: str = "--plane") -> Subspace:
    rows = [_parse_point6(part, where) for part in text.split(";")]
    s = Subspace.from_rows(6, rows)
    if s.dim != 3:
        raise DocumentError(f"{where}: vectors span dimension {s.dim}, expected 3")
    return s


def _read_document(args, expected_kind: str):
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    doc = gio.parse(text)
    if doc.kind != expected_kind:
        raise DocumentError(f"expected a {expected_kind} document, found {doc.kind}")
    return doc.payload


def _write(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, payload: dict) -> None:
    _write(args, gio.emit(Document("report", payload)))


def cmd_validate(args) -> int:
    d = _read_document(args, "gm_data")
    rep = validate(d)
    payload = {"ok": rep.ok, "type": rep.gm_type, "message": rep.message}
    if rep.witness is not None:
        payload["witness"] = list(rep.witness)
    _emit_report(args, payload)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_to_lagrangian(args) -> int:
    d = _read_document(args, "gm_data")
    ld = gm_to_lagrangian(d)
    _write(args, gio.emit(Document("lagrangian_data", ld)))
    return EXIT_OK


def cmd_from_lagrangian(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    if args.a1 is not None:
        ld = LagrangianData(a=ld.a, a1=A1_ONE if args.a1 == "1" else A1_ZERO)
    d = lagrangian_to_gm(ld)
    _write(args, gio.emit(Document("gm_data", d)))
    return EXIT_OK


def cmd_dualize(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    _write(args, gio.emit(Document("lagrangian_data", dualize(ld))))
    return EXIT_OK


def cmd_dim_report(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    rep = dim_report(ld)
    _emit_report(
        args,
        {
            "dim_a_cap_l3v5": rep.dim_a_cap_l3v5,
            "predicted_dim_x": rep.predicted_dim_x,
            "type": rep.gm_type,
            "degenerate": rep.degenerate,
        },
    )
    return EXIT_OK


def cmd_epw_point(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    v = _parse_point6(args.point)
    _emit_report(args, {"point": gio.format_vector(v), "y_stratum": y_stratum(ld.a, v)})
    return EXIT_OK


def cmd_epw_dual_point(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    f = _parse_point6(args.covector, "--covector")
    v5 = kernel(Matrix([f]))
    if v5.dim != 5:
        raise DocumentError("--covector: must be non-zero")
    _emit_report(
        args,
        {"covector": gio.format_vector(f), "y_dual_stratum": y_dual_stratum(ld.a, v5)},
    )
    return EXIT_OK


def cmd_epw_line(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    if args.kind == "y":
        base = _parse_point6(args.base, "--base")
        cert = stratum_poly_on_line(
            ld.a, base, _parse_point6(args.dir, "--dir"), "y", seed=args.seed
        )
        base_out = [gio.format_vector(cert.base)]
    else:
        plane = _parse_plane(args.plane)
        rows = plane.basis_rows()
        cert = stratum_poly_on_line(
            ld.a, (rows[0], rows[1], rows[2]), _parse_point6(args.dir, "--dir"), "z",
            seed=args.seed,
        )
        base_out = [gio.format_vector(u) for u in cert.base]
    payload = {
        "kind": cert.kind,
        "line": {"base": base_out, "direction": gio.format_vector(cert.direction)},
        "poly": gio.format_poly(cert.poly),
        "degree": cert.degree,
        "checked_points": cert.sample_consistency,
        "contains_line": cert.contains_line,
    }
    _write(args, gio.emit(Document("certificate", payload)))
    return EXIT_OK


def cmd_zeta_plane(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    plane = _parse_plane(args.plane)
    _emit_report(
        args,
        {
            "plane": [gio.format_vector(r) for r in plane.basis_rows()],
            "z_stratum": z_stratum(ld.a, plane),
        },
    )
    return EXIT_OK


def cmd_disc_line(args) -> int:
    d = _read_document(args, "gm_data")
    base = _parse_point6(args.base, "--base")
    direction = _parse_point6(args.dir, "--dir")
    line = discriminant_on_line(d, base, direction)
    payload = {
        "det_poly": gio.format_poly(line.det_poly),
        "plucker_mult": line.plucker_mult,
        "dis_poly": gio.format_poly(line.dis_poly) if line.dis_poly is not None else None,
        "dis_is_everything": line.dis_is_everything,
        "mult_exceeds_expected": line.mult_exceeds_expected,
    }
    _emit_report(args, payload)
    return EXIT_OK


def _fiber_csv(args, rows) -> None:
    out = sys.stdout if not getattr(args, "output", None) or args.output == "-" else open(
        args.output, "w", encoding="utf-8", newline=""
    )
    try:
        writer = csv.writer(out)
        writer.writerow(
            ["query", "sigma_level", "stratum", "ambient_proj_dim", "corank", "agreement"]
        )
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_fib1(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    rows = []
    for p in args.point:
        v = _parse_point6(p)
        r = fibration1_fiber(ld, v)
        rows.append([p, r.sigma_level, r.stratum_prediction, r.ambient_proj_dim, r.corank, r.agreement])
    _fiber_csv(args, rows)
    return EXIT_OK


def cmd_fib2(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    rows = []
    for p in args.plane:
        plane = _parse_plane(p)
        r = fibration2_fiber(ld, plane)
        rows.append([p, r.sigma_level, r.stratum_prediction, r.ambient_proj_dim, r.corank, r.agreement])
    _fiber_csv(args, rows)
    return EXIT_OK


def cmd_hull_sample(args) -> int:
    d = _read_document(args, "gm_data")
    w = hull_point_sample(d, args.seed)
    _emit_report(args, {"seed": args.seed, "point": gio.format_vector(w)})
    return EXIT_OK


def cmd_opposite(args) -> int:
    d = _read_document(args, "gm_data")
    _write(args, gio.emit(Document("gm_data", opposite(d))))
    return EXIT_OK


def cmd_hyperplane_update(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    coords = _parse_scalar_list(args.eta0, "--eta0")
    if len(coords) != 10:
        raise DocumentError("--eta0: expected 10 coordinates over the 3-form monomials of the hyperplane")
    eta = MultiVector.from_coords(5, 3, coords)
    a2 = hyperplane_section_lagrangian(ld.a, eta)
    _write(args, gio.emit(Document("lagrangian_data", LagrangianData(a=a2, a1=ld.a1))))
    return EXIT_OK


def cmd_sigma(args) -> int:
    ld = _read_document(args, "lagrangian_data")
    if args.point:
        level = sigma1_level(ld, _parse_point6(args.point))
        _emit_report(args, {"point": args.point, "sigma1_level": level})
    else:
        level = sigma2_level(ld, _parse_plane(args.plane))
        _emit_report(args, {"plane": args.plane, "sigma2_level": level})
    return EXIT_OK


def cmd_fixture(args) -> int:
    gm = all_gm_fixtures()
    lag = all_lagrangian_fixtures()
    if args.list:
        for name in gm:
            _write(args, f"{name} (gm_data)\n")
        for name in lag:
            _write(args, f"{name} (lagrangian_data)\n")
        return EXIT_OK
    name = args.name
    if args.lagrangian:
        if name not in lag:
            raise DocumentError(f"unknown Lagrangian fixture {name!r}")
        _write(args, gio.emit(Document("lagrangian_data", lag[name])))
    else:
        if name not in gm:
            raise DocumentError(f"unknown fixture {name!r}")
        _write(args, gio.emit(Document("gm_data", gm[name])))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest, selftest_exit_code

    results = run_selftest(verbose=True)
    passed = sum(1 for _, ok, _ in results if ok)
    print(f"{passed}/{len(results)} checks passed")
    return selftest_exit_code(results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmepw",
        description="Exact computations relating Gushel-Mukai data, Lagrangian data, "
        "EPW stratifications, and quadric fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--input", "-i", default="-", help="input document path (default stdin)")
        p.add_argument("--output", "-o", default="-", help="output path (default stdout)")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, help="check gm_data identities and classify")
    add("to-lagrangian", cmd_to_lagrangian, help="gm_data -> lagrangian_data")
    p = add("from-lagrangian", cmd_from_lagrangian, help="lagrangian_data -> gm_data")
    p.add_argument("--a1", choices=["0", "1"], default=None, help="override the odd tag")
    add("dualize", cmd_dualize, help="orthogonal Lagrangian in dual coordinates")
    add("dim-report", cmd_dim_report, help="expected dimension from lagrangian_data")
    p = add("epw-point", cmd_epw_point, help="point stratum level")
    p.add_argument("--point", required=True, help="6 comma-separated rationals")
    p = add("epw-dual-point", cmd_epw_dual_point, help="hyperplane stratum level")
    p.add_argument("--covector", required=True, help="6 comma-separated rationals cutting the hyperplane")
    p = add("epw-line", cmd_epw_line, help="degree certificate along a line or pencil")
    p.add_argument("--kind", choices=["y", "z"], default="y")
    p.add_argument("--base", help="line base point (kind y)")
    p.add_argument("--plane", help="3 base vectors u1;u2;u3 (kind z)")
    p.add_argument("--dir", required=True, help="direction vector")
    p.add_argument("--seed", type=int, default=0)
    p = add("zeta-plane", cmd_zeta_plane, help="quartic stratum level of a 3-space")
    p.add_argument("--plane", required=True, help="3 vectors u1;u2;u3")
    p = add("disc-line", cmd_disc_line, help="discriminant polynomial along a line")
    p.add_argument("--base", required=True)
    p.add_argument("--dir", required=True)
    p = add("fib1", cmd_fib1, help="first fibration fiber report (CSV)")
    p.add_argument("--point", action="append", required=True, help="repeatable; 6 rationals")
    p = add("fib2", cmd_fib2, help="second fibration fiber report (CSV)")
    p.add_argument("--plane", action="append", required=True, help="repeatable; u1;u2;u3")
    p = add("hull-sample", cmd_hull_sample, help="rational point on the Grassmannian hull")
    p.add_argument("--seed", type=int, default=0)
    add("opposite", cmd_opposite, help="swap ordinary and special data")
    p = add("hyperplane-update", cmd_hyperplane_update, help="Lagrangian of a hyperplane section")
    p.add_argument("--eta0", required=True, help="10 rationals over hyperplane 3-form monomials")
    p = add("sigma", cmd_sigma, help="exceptional-locus levels")
    p.add_argument("--point", help="6 rationals (first fibration)")
    p.add_argument("--plane", help="u1;u2;u3 (second fibration)")
    p = add("fixture", cmd_fixture, help="emit a built-in fixture document")
    p.add_argument("name", nargs="?", default="fivefold")
    p.add_argument("--lagrangian", action="store_true", help="emit the Lagrangian form")
    p.add_argument("--list", action="store_true", help="list fixture names")
    p = add("selftest", cmd_selftest, help="run the built-in invariant suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GmError, CorrespondenceError) as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

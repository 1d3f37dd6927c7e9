"""Command line entry point.

One binary with subcommands covering validation, construction,
canonicalization, enumeration, realization, and graph export.  Exit codes:
0 success, 1 domain outcome (axiom violation, not isomorphic, inconclusive
realization, no decomposition), 2 usage or input-format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions, enumeration, geometry, isomorphism
from .core import (
    Configuration,
    ConfigurationError,
    ParseError,
    check_counting_identities,
    is_connected,
    levi_dot,
    levi_graph,
    parse_configuration,
    profile,
    serialize_configuration,
    validate,
)


def _load(path: str) -> Configuration:
    return parse_configuration(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _profile_line(prof) -> str:
    return (
        f"n={prof.n} m={prof.m} s={prof.s} t={prof.t} k={prof.k} "
        f"regular={_flag(prof.is_regular)} order_exact={_flag(prof.is_order_exact)} "
        f"without_dual={_flag(prof.without_dual)}"
    )


def _cmd_validate(args) -> int:
    config = _load(args.input)
    prof = validate(config, allow_without_dual=args.allow_without_dual)
    print(_profile_line(prof))
    report = check_counting_identities(prof)
    print(
        "counting: incidence={} order_bound={} plane_bound={} point_bound={}".format(
            _flag(report.incidence_identity_ok),
            _flag(report.order_bound_ok),
            "n/a" if report.plane_lower_bound_ok is None else _flag(report.plane_lower_bound_ok),
            "n/a" if report.point_lower_bound_ok is None else _flag(report.point_lower_bound_ok),
        )
    )
    return 0


def _cmd_info(args) -> int:
    config = _load(args.input)
    print(_profile_line(profile(config)))
    print(f"connected={_flag(is_connected(config))}")
    return 0


def _cmd_canon(args) -> int:
    config = _load(args.input)
    form = isomorphism.canonical_form(config)
    canonical = Configuration(config.order, config.num_points, form.planes)
    _emit(serialize_configuration(canonical), args.out)
    return 0


def _cmd_iso(args) -> int:
    a = _load(args.first)
    b = _load(args.second)
    if isomorphism.are_isomorphic(a, b):
        print("isomorphic")
        return 0
    print("not isomorphic")
    return 1


def _cmd_aut(args) -> int:
    config = _load(args.input)
    group = isomorphism.automorphism_group(config)
    print(f"order {group.order}")
    try:
        fingerprint = isomorphism.group_fingerprint(group)
        name = isomorphism.match_named_group(fingerprint)
        print(f"abelian {_flag(fingerprint.abelian)}")
        print(f"name {name if name is not None else 'unknown'}")
    except isomorphism.SearchBudgetError:
        print("abelian unknown")
        print("name unknown")
    gens = ", ".join(isomorphism.cycle_notation(g) for g in group.generators)
    print(f"generators {gens if gens else '()'}")
    return 0


def _cmd_dual(args) -> int:
    config = _load(args.input)
    _emit(serialize_configuration(constructions.dual(config)), args.out)
    return 0


def _parse_pairing(text: str | None, m: int) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        pairing = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"pairing must be comma-separated integers: {text!r}") from None
    if len(pairing) != m:
        raise ValueError(f"pairing needs {m} entries, got {len(pairing)}")
    return pairing


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "complete":
        built = constructions.complete_configuration(args.n)
    elif kind == "polygon":
        built = constructions.polygon(args.n)
    elif kind == "fano":
        built = constructions.fano()
    elif kind == "dual":
        built = constructions.dual(_load(args.input))
    elif kind == "stack":
        built = constructions.simple_stack(_load(args.input), args.d)
    elif kind == "gstack":
        a = _load(args.input)
        b = _load(args.second)
        built = constructions.general_stack(a, b, _parse_pairing(args.pairing, a.m))
    elif kind == "product":
        built = constructions.cartesian_product(_load(args.input), _load(args.second))
    else:
        raise ValueError(f"unknown construction kind {kind!r}")
    _emit(serialize_configuration(built), args.out)
    return 0


def _cmd_stack(args) -> int:
    _emit(
        serialize_configuration(constructions.simple_stack(_load(args.input), args.d)),
        args.out,
    )
    return 0


def _cmd_gstack(args) -> int:
    a = _load(args.first)
    b = _load(args.second)
    stacked = constructions.general_stack(a, b, _parse_pairing(args.pairing, a.m))
    _emit(serialize_configuration(stacked), args.out)
    return 0


def _cmd_product(args) -> int:
    built = constructions.cartesian_product(_load(args.first), _load(args.second))
    _emit(serialize_configuration(built), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    spec = enumeration.EnumerationSpec(
        n=args.n,
        s=args.s,
        t=args.t,
        k=args.order,
        connected=not args.allow_disconnected,
        order_exact=not args.allow_order_1,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
    )
    records = enumeration.enumerate_symmetric(spec)
    if args.out is None:
        enumeration.write_catalog(records, sys.stdout)
    else:
        enumeration.write_catalog(records, args.out)
    print(f"classes {len(records)}", file=sys.stderr)
    return 0


def _cmd_levi(args) -> int:
    config = _load(args.input)
    _emit(levi_dot(levi_graph(config)), args.out)
    return 0


def _cmd_polytope(args) -> int:
    config = _load(args.input)
    poly = geometry.build_polytope(config)
    diag = geometry.polytope_diagnostics(poly)
    for rank in geometry.RANKS:
        print(f"rank {rank}: {len(poly.faces(rank))} faces")
    print(f"bounded {_flag(diag.bounded_ok)}")
    print(f"flags_length_4 {_flag(diag.flag_length_ok)}")
    print(f"sections_connected {_flag(diag.sections_ok)}")
    print(
        f"diamond {_flag(diag.diamond_ok)}"
        + (f" ({len(diag.diamond_violations)} violations)" if diag.diamond_violations else "")
    )
    for lower, upper, count in diag.diamond_violations[:5]:
        print(f"  diamond violation: {lower} < {upper} has {count} middle faces")
    return 0


def _cmd_realize(args) -> int:
    config = _load(args.input)
    embedding = geometry.realize(
        config,
        restarts=args.restarts,
        seed=args.seed,
        tolerance=args.tol,
        jobs=args.jobs,
    )
    if embedding is None:
        print("inconclusive: no certified embedding within the restart budget")
        return 1
    report = geometry.verify_embedding(config, embedding, tolerance=args.tol)
    print(
        f"realized: residual={report.max_residual:.3e} min_distance={report.min_distance:.4f} "
        f"collinearity={report.min_margin:.4f} plane_distinctness={report.min_plane_distinctness:.4f}"
    )
    if args.out is not None:
        _emit(geometry.serialize_embedding(embedding), args.out)
    return 0


def _cmd_verify(args) -> int:
    config = _load(args.input)
    embedding = geometry.parse_embedding(Path(args.emb).read_text(encoding="utf-8"), config)
    report = geometry.verify_embedding(config, embedding, tolerance=args.tol)
    print(
        f"planarity {_flag(report.planarity_ok)} (max residual {report.max_residual:.3e})"
    )
    print(f"separation {_flag(report.separation_ok)} (min distance {report.min_distance:.4f})")
    print(f"collinearity {_flag(report.collinearity_ok)} (min margin {report.min_margin:.4f})")
    print(
        f"plane_distinctness {_flag(report.plane_distinctness_ok)} "
        f"(min {report.min_plane_distinctness:.4f})"
    )
    print(
        f"line_distinctness {_flag(report.line_distinctness_ok)} "
        f"(min {report.min_line_distinctness:.4f})"
    )
    for point, plane_index, distance in report.unintended_incidences:
        print(f"note: point {point} lies near plane {plane_index + 1} (distance {distance:.2e})")
    print(f"certificate {_flag(report.ok)}")
    return 0 if report.ok else 1


def _cmd_super(args) -> int:
    config = _load(args.input)
    report = geometry.is_superconfiguration(config)
    print(f"superconfiguration {_flag(report.is_superconfiguration)}")
    print(f"lines {len(report.lines)}")
    if report.point_line_profile is not None:
        print("points/lines " + _profile_line(report.point_line_profile))
    if report.line_plane_profile is not None:
        print("lines/planes " + _profile_line(report.line_plane_profile))
    return 0 if report.is_superconfiguration else 1


def _cmd_decompose(args) -> int:
    config = _load(args.input)
    split = constructions.decompose_stack(config, max_points=args.max_points)
    if split is None:
        print("no decomposition")
        return 1
    part1, part2 = split
    print("part1 " + " ".join(str(p) for p in part1))
    print("part2 " + " ".join(str(p) for p in part2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kplanes",
        description="Configurations of points and k-planes: validate, construct, "
        "canonicalize, enumerate, and realize.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("validate", _cmd_validate, "check the incidence axiom and regularity")
    p.add_argument("input")
    p.add_argument("--allow-without-dual", action="store_true")

    p = add("info", _cmd_info, "print the incidence profile")
    p.add_argument("input")

    p = add("canon", _cmd_canon, "emit the canonical form")
    p.add_argument("input")
    p.add_argument("--out")

    p = add("iso", _cmd_iso, "test two configurations for isomorphism")
    p.add_argument("first")
    p.add_argument("second")

    p = add("aut", _cmd_aut, "compute the automorphism group")
    p.add_argument("input")

    p = add("dual", _cmd_dual, "emit the dual configuration")
    p.add_argument("input")
    p.add_argument("--out")

    p = add("construct", _cmd_construct, "build a configuration from a recipe")
    p.add_argument("kind", choices=["complete", "polygon", "fano", "dual", "stack", "gstack", "product"])
    p.add_argument("--n", type=int, help="point count for complete/polygon")
    p.add_argument("--in", dest="input", help="operand configuration file")
    p.add_argument("--with", dest="second", help="second operand configuration file")
    p.add_argument("--d", type=int, default=2, help="stacking multiplicity")
    p.add_argument("--pairing", help="comma-separated line pairing for gstack")
    p.add_argument("--out")

    p = add("stack", _cmd_stack, "simple-stack an order-1 configuration")
    p.add_argument("input")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--out")

    p = add("gstack", _cmd_gstack, "general-stack two order-1 configurations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--pairing")
    p.add_argument("--out")

    p = add("product", _cmd_product, "cartesian product of two order-1 configurations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--out")

    p = add("enumerate", _cmd_enumerate, "isomorph-free census for given parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--allow-order-1", action="store_true")
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--out")

    p = add("levi", _cmd_levi, "emit the Levi graph as DOT")
    p.add_argument("input")
    p.add_argument("--out")

    p = add("polytope", _cmd_polytope, "face counts and abstract-polytope diagnostics")
    p.add_argument("input")

    p = add("realize", _cmd_realize, "search for a flat-faced 3-space embedding")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = add("verify", _cmd_verify, "re-check an embedding independently")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--emb", required=True)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("super", _cmd_super, "test the superconfiguration property")
    p.add_argument("input")

    p = add("decompose", _cmd_decompose, "search for a general-stack bipartition")
    p.add_argument("input")
    p.add_argument("--max-points", type=int, default=16)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ConfigurationError,
        isomorphism.SearchBudgetError,
        enumeration.EnumerationBudgetError,
        enumeration.CatalogFormatError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

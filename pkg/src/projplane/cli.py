"""Command-line front end.

Exit codes: 0 success, 2 usage or I/O error, 3 malformed input, 4 violated
geometric precondition, 5 failed verification.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import sampling
from .cross_ratio import INFINITY, cross_ratio_affine, cross_ratio_collinear, cross_ratio_rp1
from .errors import GeometryError, ParseError
from .formats import Record, format_points, parse_matrix, parse_points, parse_scene
from .group import Homography, act_line, act_point, inverse
from .homogeneous import ProjPoint, from_affine, is_proper, join, meet, to_affine_chart
from .perspective import CentralProjection, Drawing, Plane3, Point3, render_scene
from .scalar import epsilon as epsilon_context
from .scalar import format_decimal, format_scalar, is_exact, parse_scalar
from .svg import Viewport, to_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_VERIFY = 5


class UsageError(Exception):
    pass


def format_value(value) -> str:
    if value is INFINITY:
        return "inf"
    if is_exact(value):
        return f"{format_scalar(value)} ({format_decimal(value)})"
    return format_decimal(value)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _exact(args) -> bool:
    return args.backend == "exact"


def _inline_point(token: str, exact: bool):
    try:
        values = [parse_scalar(t) for t in token.split(":")]
    except ValueError as exc:
        raise ParseError(str(exc), source="argv") from None
    if not exact:
        values = [float(v) for v in values]
    return values


def cmd_cross_ratio(args) -> int:
    exact = _exact(args)
    if args.file:
        if args.values:
            raise UsageError("give either inline values or --file, not both")
        records = parse_points(_read(args.file), args.file, exact)
        points = [r.value for r in records if not r.is_line]
    else:
        points = [_inline_point(t, exact) for t in args.values]
    if len(points) != 4:
        raise UsageError(f"cross-ratio needs exactly 4 points, got {len(points)}")

    sizes = {len(p) for p in points}
    if sizes == {1}:
        value = cross_ratio_affine(*(p[0] for p in points))
    elif sizes == {2}:
        value = cross_ratio_rp1(*(ProjPoint(tuple(p)) for p in points))
    elif sizes == {3}:
        value = cross_ratio_collinear(*(ProjPoint(tuple(p)) for p in points))
    else:
        raise UsageError("points must all be affine scalars, points of RP^1 or points of RP^2")
    print(format_value(value))
    return EXIT_OK


def cmd_transform(args) -> int:
    exact = _exact(args)
    g = Homography(parse_matrix(_read(args.matrix), args.matrix, exact))
    if args.inverse:
        g = inverse(g)
    records = parse_points(_read(args.points), args.points, exact)
    out = []
    for r in records:
        if r.is_line:
            out.append(Record(r.label, act_line(g, r.value)))
            continue
        image = act_point(g, r.value)
        before, after = is_proper(r.value), is_proper(image)
        if before != after:
            change = "proper→improper" if before else "improper→proper"
            print(f"{r.label}: {change}", file=sys.stderr)
        out.append(Record(r.label, image))
    _write(args.out, format_points(out))
    return EXIT_OK


def _projection(args, exact) -> CentralProjection:
    conv = (lambda v: v) if exact else float
    center = Point3(*(conv(parse_scalar(c)) for c in args.center))
    *normal, offset = (conv(parse_scalar(c)) for c in args.plane)
    return CentralProjection(center, Plane3(tuple(normal), offset))


def cmd_render(args) -> int:
    exact = _exact(args)
    scene = parse_scene(_read(args.scene), args.scene, exact)
    proj = _projection(args, exact)
    extra = ()
    if args.mark_vanishing:
        extra = tuple(
            Point3(*(b - a for a, b in zip(scene.vertices[i], scene.vertices[j]))) for i, j in scene.edges
        )
    drawing = render_scene(scene, proj, extra, front_only=args.front_only)
    viewport = Viewport(args.width, args.height, args.scale)
    _write(args.out, to_svg(drawing, viewport))
    return EXIT_OK


def _figure_quadruple():
    return [from_affine((Fraction(x), 0)) for x in (0, 1, 3, 10)]


def _perspectivity_figure(viewport: Viewport) -> tuple[str, list]:
    """Four points on one line, their central images on another, and the rays."""
    pts = [from_affine((Fraction(x, 4) - 1, Fraction(-1))) for x in (0, 1, 3, 10)]
    center = from_affine((Fraction(1, 2), Fraction(6, 5)))
    target = join(from_affine((-2, Fraction(1, 2))), from_affine((3, 0)))
    images = [meet(join(center, p), target) for p in pts]
    before = cross_ratio_collinear(*pts)
    after = cross_ratio_collinear(*images)
    chart = lambda P: tuple(float(c) for c in to_affine_chart(P))
    segments = [(chart(pts[0]), chart(pts[-1])), (chart(images[0]), chart(images[-1]))]
    segments += [(chart(center), chart(p)) for p in pts]
    names = "ABCD"
    notes = [(*chart(p), n) for p, n in zip(pts, names)]
    notes += [(*chart(q), n + "'") for q, n in zip(images, names)]
    notes.append((-1.9, -1.3, f"(A,B;C,D) = {format_value(before)}"))
    notes.append((-1.9, -1.2, f"(A',B';C',D') = {format_value(after)}"))
    svg = to_svg(Drawing(tuple(segments), (chart(center),)), viewport, annotations=notes)
    return svg, [before, after]


def cmd_demo_invariance(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    exact = _exact(args)
    lines = []
    failures = []

    quad = _figure_quadruple()
    shift = Homography(((1, 0, 2), (0, 1, 1), (0, 0, 1)))
    ref = cross_ratio_collinear(*quad)
    moved = cross_ratio_collinear(*(act_point(shift, p) for p in quad))
    lines.append(f"figure: (0,1;3,10) = {format_scalar(ref)}, translated = {format_scalar(moved)}")
    if ref != moved:
        failures.append(("figure", ref, moved))

    for trial in range(1, args.trials + 1):
        rng = sampling.spawn(args.seed, trial)
        quad = sampling.collinear_quadruple(rng)
        g = sampling.homography(rng)
        if not exact:
            quad = [sampling.floatify(p) for p in quad]
            g = sampling.float_homography(g)
        before = cross_ratio_collinear(*quad)
        after = cross_ratio_collinear(*(act_point(g, p) for p in quad))
        if exact:
            ok = before == after
        else:
            ok = before is not INFINITY and after is not INFINITY and abs(after - before) <= 1e-6 * max(
                1.0, abs(before)
            )
        status = "ok" if ok else "MISMATCH"
        lines.append(f"trial {trial}: {format_scalar(before)} -> {format_scalar(after)} {status}")
        if not ok:
            failures.append((trial, quad, g, before, after))

    passed = args.trials - sum(1 for f in failures if f[0] != "figure")
    verdict = "PASS" if not failures else "FAIL"
    lines.append(f"{passed}/{args.trials} {verdict}")
    for f in failures:
        lines.append(f"counterexample: {f!r}")
    _write(None, "\n".join(lines) + "\n")

    if args.out:
        svg, _ = _perspectivity_figure(Viewport(args.width, args.height, args.scale))
        _write(args.out, svg)
    return EXIT_OK if not failures else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float, default=None, help="float tolerance (default 1e-9)")

    view = argparse.ArgumentParser(add_help=False)
    view.add_argument("--width", type=float, default=800)
    view.add_argument("--height", type=float, default=600)
    view.add_argument("--scale", type=float, default=200, help="pixels per chart unit")

    def backend(p, default):
        p.add_argument("--backend", choices=("exact", "float"), default=default)

    parser = argparse.ArgumentParser(prog="projplane", description="Exact projective plane toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cross-ratio", parents=[common], help="cross-ratio of four points")
    p.add_argument("values", nargs="*", help="4 affine scalars, or 4 points written x1:x2 or x1:x2:x3")
    p.add_argument("--file", "-f", help="points file with 4 points")
    backend(p, "exact")
    p.set_defaults(func=cmd_cross_ratio)

    p = sub.add_parser("transform", parents=[common], help="apply a homography to a points file")
    p.add_argument("matrix")
    p.add_argument("points")
    p.add_argument("--out", "-o")
    p.add_argument("--inverse", action="store_true", help="apply the inverse homography")
    backend(p, "exact")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("render", parents=[common, view], help="render a wireframe scene to SVG")
    p.add_argument("scene")
    p.add_argument("--out", "-o")
    p.add_argument("--center", nargs=3, default=("0", "0", "0"), metavar=("X", "Y", "Z"))
    p.add_argument("--plane", nargs=4, default=("0", "0", "1", "1"), metavar=("A", "B", "C", "D"),
                   help="image plane A x + B y + C z = D")
    p.add_argument("--front-only", action="store_true", help="drop geometry behind the center")
    p.add_argument("--mark-vanishing", action="store_true", help="also mark vanishing points of edge directions")
    backend(p, "float")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("demo-invariance", parents=[common, view], help="randomized cross-ratio invariance check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--out", "-o", help="write a perspectivity figure as SVG")
    backend(p, "exact")
    p.set_defaults(func=cmd_demo_invariance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.epsilon is not None:
            with epsilon_context(args.epsilon):
                return args.func(args)
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: instance files in, deterministic reports out.

An instance file is line-based text.  One of three source blocks must be
present:

    matrix:            lattice:           model:
    1 1 1 1            4 3 0              dims: 2 2 2 2
    1 5 10 25          4 5 0              face: 1 2
    cost: 0 1 0 1      4 3 2              face: 3 4
                       cost: 1 1 1        sense: max

Rows of a matrix or lattice block are bare integer lines.  Other fields:
cost (rationals like 3/4 or -2), names (one label per variable), tiebreak,
sense (models only), box (oracle bounds, one integer or one per column),
budget (fan exploration cap).  '#' starts a comment.  Command-line flags
override file fields.

Reports are deterministic: equal inputs and flags give byte-identical
output, except lines starting with '#', which carry advisory timing.
Exact rationals are printed in lowest terms as p/q; decimal renderings
are 10-digit truncations and advisory only.  Exit codes: 0 success,
1 mathematical domain error, 2 bad input, 3 internal verification
failure.  IPGAP_THREADS caps worker processes for the oracle scan.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import lp, oracle
from .errors import BadParameter, InfiniteFiber, IpgapError, ParseError, VerificationError
from .exactmath import IntMatrix
from .fan import explore_cones, gap_fan_subdivide
from .gapcore import GapInstance, GapReport, gap_report
from .models import MarginalModel, cells, entry_instance, margin_matrix
from .monomial import IrreducibleComponent
from .toric import TIEBREAKS, ip_optimum


@dataclass(frozen=True)
class InstanceSpec:
    """Parsed instance file, before flags are applied."""

    matrix: IntMatrix | None = None
    lattice: IntMatrix | None = None
    model: MarginalModel | None = None
    # weight rows, applied in sequence; one row is the usual case, more
    # make tie resolution part of optimality
    cost: tuple[tuple[Fraction, ...], ...] | None = None
    names: tuple[str, ...] | None = None
    tiebreak: str | None = None
    sense: str | None = None
    box: tuple[int, ...] | None = None
    budget: int | None = None


def _tokens(text: str, lineno: int, col0: int):
    pos = 0
    for tok in text.replace(",", " ").split():
        pos = text.index(tok, pos)
        yield tok, col0 + pos
        pos += len(tok)


def _ints(text: str, lineno: int, col0: int = 1) -> tuple[int, ...]:
    out = []
    for tok, col in _tokens(text, lineno, col0):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, col)
    return tuple(out)


def _rats(text: str, lineno: int, col0: int = 1) -> tuple[Fraction, ...]:
    out = []
    for tok, col in _tokens(text, lineno, col0):
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"expected a rational, got {tok!r}", lineno, col)
    return tuple(out)


def parse_instance_text(text: str) -> InstanceSpec:
    matrix_rows = lattice_rows = None
    dims = None
    faces: list[tuple[int, ...]] = []
    fields: dict = {}
    block = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        line = content.strip()
        if not line:
            continue
        indent = len(content) - len(content.lstrip())
        key, sep, _ = line.partition(":")
        if not sep:
            row = _ints(line, lineno, indent + 1)
            if block == "matrix":
                matrix_rows.append(row)
            elif block == "lattice":
                lattice_rows.append(row)
            else:
                raise ParseError(
                    "numeric row outside a matrix/lattice block", lineno, indent + 1
                )
            continue
        key = key.strip().lower()
        colon = content.index(":")
        vraw = content[colon + 1 :]
        vcol = colon + 2 + (len(vraw) - len(vraw.lstrip()))
        value = vraw.strip()
        if key == "matrix":
            block, matrix_rows = "matrix", []
        elif key == "lattice":
            block, lattice_rows = "lattice", []
        elif key == "model":
            block = "model"
        elif key == "dims":
            if block != "model":
                raise ParseError("dims belongs inside a model block", lineno, indent + 1)
            dims = _ints(value, lineno, vcol)
        elif key == "face":
            if block != "model":
                raise ParseError("face belongs inside a model block", lineno, indent + 1)
            faces.append(_ints(value, lineno, vcol))
        elif key == "cost":
            fields["cost"] = fields.get("cost", ()) + (_rats(value, lineno, vcol),)
        elif key == "names":
            fields["names"] = tuple(value.split())
        elif key == "tiebreak":
            if value not in TIEBREAKS:
                raise ParseError(f"unknown tiebreak {value!r}", lineno, vcol)
            fields["tiebreak"] = value
        elif key == "sense":
            if value not in ("min", "max"):
                raise ParseError(
                    f"sense must be min or max, not {value!r}", lineno, vcol
                )
            fields["sense"] = value
        elif key == "box":
            fields["box"] = _ints(value, lineno, vcol)
        elif key == "budget":
            fields["budget"] = _ints(value, lineno, vcol)[0]
        else:
            raise ParseError(f"unknown field {key!r}", lineno, indent + 1)
    sources = sum(x is not None for x in (matrix_rows, lattice_rows, dims))
    if sources != 1:
        raise ParseError(
            "an instance needs exactly one of a matrix, a lattice, or a model"
        )
    spec = {}
    if matrix_rows is not None:
        if not matrix_rows:
            raise ParseError("matrix block has no rows")
        spec["matrix"] = IntMatrix(matrix_rows)
    if lattice_rows is not None:
        if not lattice_rows:
            raise ParseError("lattice block has no rows")
        spec["lattice"] = IntMatrix(lattice_rows)
    if dims is not None:
        spec["model"] = MarginalModel(dims, faces)
    return InstanceSpec(**spec, **fields)


def load_instance(path: str) -> InstanceSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_instance_text(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}")


# ---------------------------------------------------------------- rendering


def _dec10(x: Fraction) -> str:
    """Ten fractional digits, truncated toward zero; advisory only."""
    sign = "-" if x < 0 else ""
    ax = -x if x < 0 else x
    whole, rem = divmod(ax.numerator, ax.denominator)
    return f"{sign}{whole}.{rem * 10**10 // ax.denominator:010d}"


def _rat_with_dec(x: Fraction) -> str:
    return f"{x} (~ {_dec10(x)})"


def _vec(xs) -> str:
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _mono(exps, names) -> str:
    parts = [
        names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
    ]
    return " ".join(parts) if parts else "1"


def _binomial(g, names) -> str:
    return f"{_mono(g.plus, names)} - {_mono(g.minus, names)}"


def _component_ideal(comp: IrreducibleComponent, names) -> str:
    parts = [
        names[i] + (f"^{comp.bound[i] + 1}" if comp.bound[i] else "")
        for i in comp.support
    ]
    return "<" + ", ".join(parts) + ">"


def _default_names(spec: InstanceSpec, nvars: int) -> tuple[str, ...]:
    if spec.names is not None:
        if len(spec.names) != nvars:
            raise BadParameter(
                f"{len(spec.names)} names given for {nvars} variables"
            )
        return spec.names
    if spec.model is not None:
        return tuple(
            "x_" + "".join(str(i) for i in cell) for cell in cells(spec.model.dims)
        )
    return tuple(f"x{i + 1}" for i in range(nvars))


# ----------------------------------------------------------- construction


def _build_instance(spec: InstanceSpec, args) -> GapInstance:
    tiebreak = getattr(args, "tiebreak", None) or spec.tiebreak
    if spec.model is not None:
        sense = getattr(args, "sense", None) or spec.sense or "max"
        return entry_instance(spec.model, sense, tiebreak or "revgrevlex")
    if spec.cost is None:
        raise ParseError("matrix and lattice instances need a cost field")
    if spec.matrix is not None:
        return GapInstance.from_matrix(spec.matrix, spec.cost, tiebreak or "grevlex")
    return GapInstance.from_lattice(spec.lattice, spec.cost, tiebreak or "grevlex")


def _instance_header(spec: InstanceSpec, inst: GapInstance, names) -> list[str]:
    if spec.model is not None:
        dims = "x".join(str(d) for d in spec.model.dims)
        faces = " ".join(
            "{" + ",".join(str(j) for j in face) + "}" for face in spec.model.faces
        )
        src = f"model {dims} table, faces {faces}"
    elif spec.matrix is not None:
        src = f"matrix {spec.matrix.nrows} x {spec.matrix.ncols}"
    else:
        src = f"lattice {inst.lattice.nrows} x {inst.lattice.ncols}"
    lines = [f"instance: {src}"]
    for row in spec.cost if spec.cost is not None else (inst.cost,):
        lines.append(f"cost: {_vec(row)}")
    lines.append(f"variables: {' '.join(names)}")
    return lines


# ------------------------------------------------------------------ reports


def _report_data(spec: InstanceSpec, inst: GapInstance, rep: GapReport, names):
    comps = []
    for i, entry in enumerate(rep.per_component):
        comps.append(
            {
                "index": i + 1,
                "ideal": _component_ideal(entry.component, names),
                "support": list(entry.component.support),
                "bound": list(entry.component.bound),
                "value": str(entry.value),
                "aux_optimum": [str(x) for x in entry.aux_optimum],
            }
        )
    data = {
        "gap": str(rep.gap),
        "gap_decimal": _dec10(rep.gap),
        "groebner_size": len(inst.groebner.elements),
        "minimal_generators": len(inst.ideal.gens),
        "components": comps,
        "winner": None,
        "witness_z": list(rep.witness_z),
    }
    if rep.winner is not None:
        data["winner"] = next(
            c["index"] for c, e in zip(comps, rep.per_component)
            if e.component == rep.winner
        )
    if inst.matrix is not None:
        data["witness_b"] = list(inst.matrix.mul_vector(rep.witness_z))
        data["schrijver_bound"] = str(rep.schrijver_bound)
    return data


def cmd_gap(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    inst = _build_instance(spec, args)
    rep = gap_report(inst)
    names = _default_names(spec, inst.nvars)
    data = _report_data(spec, inst, rep, names)
    lines = _instance_header(spec, inst, names)
    lines += [
        f"groebner elements: {data['groebner_size']}",
        f"minimal generators: {data['minimal_generators']}",
        f"components: {len(data['components'])}",
    ]
    for c, entry in zip(data["components"], rep.per_component):
        lines.append(f"component {c['index']}: {c['ideal']}")
        lines.append(f"  bound monomial: {_mono(entry.component.bound, names)}")
        lines.append(f"  value: {_rat_with_dec(entry.value)}")
        lines.append(f"  aux optimum: {_vec(entry.aux_optimum)}")
    lines.append(f"gap: {_rat_with_dec(rep.gap)}")
    if data["winner"] is None:
        lines.append("winner: none (non-optimal ideal is zero)")
    else:
        win = data["components"][data["winner"] - 1]
        lines.append(f"winner: component {win['index']} {win['ideal']}")
    lines.append(f"witness z: {_vec(rep.witness_z)}")
    if inst.matrix is not None:
        lines.append(f"witness b: {_vec(data['witness_b'])}")
        lines.append(f"schrijver bound: {rep.schrijver_bound}")
    return lines, data


def cmd_decompose(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    inst = _build_instance(spec, args)
    names = _default_names(spec, inst.nvars)
    lines = _instance_header(spec, inst, names)
    lines.append(f"minimal generators: {len(inst.ideal.gens)}")
    for i, g in enumerate(inst.ideal.gens, 1):
        lines.append(f"  g{i}: {_mono(g, names)}")
    lines.append(f"components: {len(inst.components)}")
    for i, comp in enumerate(inst.components, 1):
        lines.append(f"  component {i}: {_component_ideal(comp, names)}")
    data = {
        "minimal_generators": [list(g) for g in inst.ideal.gens],
        "components": [
            {
                "index": i + 1,
                "ideal": _component_ideal(c, names),
                "support": list(c.support),
                "bound": list(c.bound),
            }
            for i, c in enumerate(inst.components)
        ],
    }
    return lines, data


def cmd_gb(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    inst = _build_instance(spec, args)
    names = _default_names(spec, inst.nvars)
    lines = _instance_header(spec, inst, names)
    lines.append(f"groebner elements: {len(inst.groebner.elements)}")
    for i, g in enumerate(inst.groebner.elements, 1):
        lines.append(f"  {i}: {_binomial(g, names)}")
    data = {
        "elements": [
            {"lead": list(g.plus), "trail": list(g.minus), "text": _binomial(g, names)}
            for g in inst.groebner.elements
        ]
    }
    return lines, data


def cmd_witness(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    inst = _build_instance(spec, args)
    rep = gap_report(inst)
    names = _default_names(spec, inst.nvars)
    lines = _instance_header(spec, inst, names)
    data = {"gap": str(rep.gap), "witness_z": list(rep.witness_z)}
    lines.append(f"gap: {_rat_with_dec(rep.gap)}")
    lines.append(f"witness z: {_vec(rep.witness_z)}")
    if inst.matrix is not None:
        b = inst.matrix.mul_vector(rep.witness_z)
        zopt = ip_optimum(inst.groebner, rep.witness_z)
        ipval = sum((c * x for c, x in zip(inst.cost, zopt)), Fraction(0))
        relax = lp.lp_value(inst.matrix, b, inst.cost)
        data["witness_b"] = list(b)
        data["ip_value"] = str(ipval)
        data["lp_value"] = str(relax.value)
        lines.append(f"witness b: {_vec(b)}")
        lines.append(f"integer optimum: {_vec(zopt)} with value {ipval}")
        lines.append(f"relaxation value: {_rat_with_dec(relax.value)}")
        lines.append(f"difference: {_rat_with_dec(ipval - relax.value)}")
    return lines, data


def cmd_margins(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    if spec.model is None:
        raise BadParameter("margins needs a model instance")
    a = margin_matrix(spec.model)
    lines = [f"margin matrix: {a.nrows} x {a.ncols}, rank {a.rank()}"]
    for row in a.rows:
        lines.append(" ".join(str(x) for x in row))
    data = {"nrows": a.nrows, "ncols": a.ncols, "rank": a.rank(),
            "rows": [list(r) for r in a.rows]}
    return lines, data


# ------------------------------------------------------------------- oracle


def _oracle_slice(rows, cost, box, first, cap):
    """Scan the sub-box with fixed first coordinate; runs in a worker."""
    a = IntMatrix(rows)
    c = tuple(Fraction(x) for x in cost)
    best = best_z = None
    seen: dict = {}
    for rest in product(*(range(x + 1) for x in box[1:])):
        z = (first,) + rest
        b = a.mul_vector(z)
        if b not in seen:
            ip = oracle.brute_ip(a, b, c, cap)
            relax = lp.lp_value(a, b, c)
            if relax.status != lp.OPTIMAL:
                raise InfiniteFiber("relaxation unbounded below on a box fiber")
            seen[b] = ip - relax.value
        if best is None or seen[b] > best:
            best, best_z = seen[b], z
    return str(best), best_z


def _oracle_gap(a: IntMatrix, cost, box) -> tuple[Fraction, tuple[int, ...]]:
    threads = max(1, int(os.environ.get("IPGAP_THREADS", "1") or 1))
    if threads == 1 or box[0] == 0:
        return oracle.brute_gap_box(a, cost, box)
    rows = [list(r) for r in a.rows]
    cost_s = [str(c) for c in cost]
    best = best_z = None
    with ProcessPoolExecutor(max_workers=min(threads, box[0] + 1)) as pool:
        slices = pool.map(
            _oracle_slice,
            *zip(*((rows, cost_s, box, v, oracle.DEFAULT_POINT_CAP)
                   for v in range(box[0] + 1))),
        )
        for gap_s, z in slices:
            g = Fraction(gap_s)
            if best is None or g > best:
                best, best_z = g, tuple(z)
    return best, best_z


def cmd_oracle(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    if spec.model is not None:
        a = margin_matrix(spec.model)
        sense = getattr(args, "sense", None) or spec.sense or "max"
        lead = Fraction(-1) if sense == "max" else Fraction(1)
        cost = (lead,) + (Fraction(0),) * (a.ncols - 1)
    elif spec.matrix is not None:
        a = spec.matrix
        if spec.cost is None:
            raise ParseError("matrix instances need a cost field")
        cost = spec.cost[0]
    else:
        raise BadParameter("the oracle needs a matrix or model instance")
    box = args.box or spec.box
    if box is None:
        raise BadParameter("the oracle needs --box bounds")
    if len(box) == 1:
        box = box * a.ncols
    if len(box) != a.ncols:
        raise BadParameter(
            f"box has {len(box)} bounds for {a.ncols} columns"
        )
    if any(x < 0 for x in box):
        raise BadParameter("box bounds must be nonnegative")
    value, z = _oracle_gap(a, cost, box)
    lines = [
        f"instance: matrix {a.nrows} x {a.ncols}",
        f"cost: {_vec(cost)}",
        f"box: {_vec(box)}",
        f"oracle gap: {_rat_with_dec(value)}",
        f"attained at z: {_vec(z)}",
    ]
    data = {
        "box": list(box),
        "oracle_gap": str(value),
        "attained_at": list(z),
    }
    if args.verify:
        inst = _build_instance(spec, args)
        rep = gap_report(inst)
        data["computed_gap"] = str(rep.gap)
        if value > rep.gap:
            raise VerificationError(
                f"oracle found gap {value} above the computed gap {rep.gap}"
            )
        if value == rep.gap:
            lines.append(f"verify: {value} matches the computed gap")
            data["verify"] = "match"
        else:
            lines.append(
                f"verify: oracle {value} below the computed gap {rep.gap} "
                "(box too small to attain it)"
            )
            data["verify"] = "below"
    return lines, data


# --------------------------------------------------------------------- fan


def _load_seeds(path: str) -> list[tuple[Fraction, ...]]:
    seeds = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if line:
                    seeds.append(_rats(line, lineno))
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}")
    if not seeds:
        raise ParseError(f"no seed costs in {path}")
    return seeds


def cmd_fan(spec: InstanceSpec, args) -> tuple[list[str], dict]:
    if spec.matrix is None:
        raise BadParameter("the fan exploration needs a matrix instance")
    a = spec.matrix
    if args.seeds:
        seeds = _load_seeds(args.seeds)
    elif spec.cost is not None:
        seeds = [spec.cost[0]]
    else:
        raise ParseError("fan needs a cost field or a --seeds file")
    budget = args.budget if args.budget is not None else (spec.budget or 200)
    names = _default_names(spec, a.ncols)
    cones = explore_cones(a, seeds, budget)
    lines = [
        f"instance: matrix {a.nrows} x {a.ncols}",
        f"seeds: {len(seeds)}",
        f"cones discovered: {len(cones)}",
    ]
    data_cones = []
    total_pieces = 0
    for i, (gb, cone) in enumerate(cones, 1):
        center = cone.interior_point()
        inst = GapInstance.from_matrix(a, center)
        pieces = gap_fan_subdivide(inst)
        total_pieces += len(pieces)
        lines.append(f"cone {i}:")
        for h in cone.inequalities:
            lines.append(f"  facet: {_vec(h)} . c >= 0")
        lines.append(f"  ideal: <{', '.join(_mono(g, names) for g in inst.ideal.gens)}>")
        lines.append(f"  components: {len(inst.components)}")
        for comp in inst.components:
            lines.append(f"    {_component_ideal(comp, names)}")
        lines.append(f"  pieces: {len(pieces)}")
        piece_data = []
        for j, piece in enumerate(pieces, 1):
            lines.append(
                f"  piece {j}: winner {_component_ideal(piece.winner, names)}"
                f", gap form {_vec(piece.linear_form)} . c"
            )
            piece_data.append(
                {
                    "winner": _component_ideal(piece.winner, names),
                    "winner_support": list(piece.winner.support),
                    "winner_bound": list(piece.winner.bound),
                    "linear_form": [str(x) for x in piece.linear_form],
                    "inequalities": [list(h) for h in piece.cone.inequalities],
                }
            )
        data_cones.append(
            {
                "index": i,
                "inequalities": [list(h) for h in cone.inequalities],
                "ideal_generators": [list(g) for g in inst.ideal.gens],
                "components": [
                    {"support": list(c.support), "bound": list(c.bound)}
                    for c in inst.components
                ],
                "pieces": piece_data,
            }
        )
    lines.append(f"gap pieces total: {total_pieces}")
    data = {"cones": data_cones, "pieces_total": total_pieces}
    return lines, data


# -------------------------------------------------------------------- main


COMMANDS = {
    "gap": cmd_gap,
    "decompose": cmd_decompose,
    "gb": cmd_gb,
    "fan": cmd_fan,
    "oracle": cmd_oracle,
    "witness": cmd_witness,
    "margins": cmd_margins,
}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ipgap",
        description="Exact integer-programming gap computations.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("gap", "full gap report with per-component values and witness"),
        ("decompose", "minimal generators and irreducible components"),
        ("gb", "reduced Groebner basis of the lattice ideal"),
        ("fan", "explore cost cones and the gap function's pieces"),
        ("oracle", "brute-force gap over a box of nonnegative points"),
        ("witness", "witness right-hand side attaining the gap"),
        ("margins", "print a model's margin matrix"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="instance file path")
        p.add_argument(
            "--format", choices=("text", "json", "json-like-structured"),
            default="text", help="report format (default text)",
        )
        if name in ("gap", "decompose", "gb", "witness", "oracle"):
            p.add_argument(
                "--tiebreak", choices=TIEBREAKS, default=None,
                help="order tiebreak (default grevlex; models revgrevlex)",
            )
            p.add_argument(
                "--sense", choices=("min", "max"), default=None,
                help="entry bound sense for model instances (default max)",
            )
        if name == "fan":
            p.add_argument("--seeds", default=None, help="file of seed cost rows")
            p.add_argument(
                "--budget", type=int, default=None,
                help="cap on exploration basis computations (default 200)",
            )
        if name == "oracle":
            p.add_argument(
                "--box",
                type=lambda s: tuple(int(t) for t in s.split(",")),
                default=None,
                help="bounds N or N,N,... for the scanned points",
            )
            p.add_argument(
                "--verify", action="store_true",
                help="cross-check the oracle gap against the computed gap",
            )
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    t0 = time.monotonic()
    try:
        spec = load_instance(args.instance)
        lines, data = COMMANDS[args.command](spec, args)
    except IpgapError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    if args.format in ("json", "json-like-structured"):
        out = json.dumps(data, indent=2)
    else:
        out = "\n".join(lines)
    print(out)
    print(f"# elapsed: {time.monotonic() - t0:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())

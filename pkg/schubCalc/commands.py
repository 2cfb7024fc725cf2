"""
The command line actions. Each one takes the parsed arguments and returns a CommandResult; ``run_command`` parses and dispatches.
"""

from argparse import Namespace
from typing import Callable, Sequence, Union

import schubCalc
from schubCalc import constants as const
from schubCalc.helpers import UsageError, split_top_level, as_fraction
from schubCalc.configuration import get_config
from schubCalc.output import CommandResult
from schubCalc.arguments import parse_args
from schubCalc.combinatorics import (
    Partition,
    Permutation,
    Box,
    partitions_in_box,
    partitions_of,
    hooks_and_syt_count,
    syt_enumerate,
    q_binomial,
    bruhat_covers,
    grassmannian_point_count,
)
from schubCalc.polynomials import evaluate
from schubCalc import schur, grassmannian, flags, pipedreams, gz

_LOGGER = schubCalc.getLogger(__name__)

Handler = Callable[[Namespace], CommandResult]


def check_size(n: int, what: str):
    "Refuses sizes above the configured ``engine.max_n``"
    max_n = get_config().engine.max_n
    if n > max_n:
        raise UsageError(f"{what} {n} exceeds the size cap {max_n} (set engine.max_n or {const.ENV_MAX_N} to raise it)")

def parse_partition(literal: str) -> Partition:
    return Partition.parse(literal)

def parse_permutation(literal: str) -> Permutation:
    w = Permutation.parse(literal)
    check_size(w.n, "Permutation size")
    return w

def parse_weight(literal: str) -> gz.Weight:
    lam = gz.Weight.parse(literal)
    check_size(lam.n, "Weight length")
    return lam

def parse_classes(literal: str) -> list[Partition]:
    "Reads '1,1,1,1' or '[2,1],1' into partitions; a bare integer m stands for the special class (m)"
    classes = []
    for item in split_top_level(literal):
        if item.startswith("["):
            classes.append(Partition.parse(item))
        else:
            try:
                m = int(item)
            except ValueError as exce:
                raise UsageError(f"Cannot read class {item!r}; use an integer or a partition like [2,1]") from exce
            classes.append(Partition((m,)))
    if not classes:
        raise UsageError("No classes given")
    return classes

def _scalar(args: Namespace, value) -> CommandResult:
    return CommandResult((args.command, args.action), {"value": value}, str(value))

def _poly(args: Namespace, poly, **extra) -> CommandResult:
    return CommandResult((args.command, args.action), {"poly": poly, **extra}, str(poly))

def _listing(args: Namespace, items: list, lines: Sequence[str]) -> CommandResult:
    return CommandResult((args.command, args.action), {"count": len(items), "items": items}, "\n".join(lines) or "(none)")

def _gr_result(args: Namespace, value: grassmannian.GrClassSum) -> CommandResult:
    return CommandResult((args.command, args.action), {"terms": dict(value.terms)}, str(value))

def _flag_result(args: Namespace, value: flags.FlClassSum) -> CommandResult:
    return CommandResult((args.command, args.action), {"terms": dict(value.terms)}, str(value))

def _expansion_text(expansion: dict[Partition, int]) -> str:
    if not expansion:
        return "0"
    items = sorted(expansion.items(), key=lambda item: item[0].parts, reverse=True)
    return " + ".join(f"s{lam}" if c == 1 else f"{c}*s{lam}" for lam, c in items)


## gr

def _gr_box(args: Namespace) -> Box:
    check_size(args.n, "Grassmannian dimension n")
    return Box.grassmannian(args.k, args.n)

def gr_pieri(args: Namespace) -> CommandResult:
    box = _gr_box(args)
    start = grassmannian.GrClassSum(box, {parse_partition(args.partition): 1})
    return _gr_result(args, grassmannian.pieri_multiply(start, args.m, args.kind))

def gr_product(args: Namespace) -> CommandResult:
    box = _gr_box(args)
    classes = parse_classes(args.classes)
    result = grassmannian.GrClassSum(box, {classes[0]: 1})
    for lam in classes[1:]:
        result = grassmannian.gr_product(result, grassmannian.GrClassSum(box, {lam: 1}))
    return _gr_result(args, result)

def gr_degree(args: Namespace) -> CommandResult:
    _gr_box(args)
    return _scalar(args, grassmannian.schubert_degree_gr(parse_partition(args.partition), args.k, args.n))

def gr_poincare(args: Namespace) -> CommandResult:
    _gr_box(args)
    poly = grassmannian.gr_poincare(args.k, args.n)
    if args.q is None:
        return _poly(args, poly)
    value = evaluate(poly, [args.q])
    counted = grassmannian_point_count(args.k, args.n, args.q)
    return _poly(args, poly, value=value, points=counted)

def gr_plucker(args: Namespace) -> CommandResult:
    check_size(args.n, "Dimension n")
    relations = grassmannian.plucker_quadrics_k2(args.n)
    payload = {"relations": relations}
    lines = [str(r) for r in relations] or ["(no relations)"]
    coords = None
    if args.matrix:
        rows = [[as_fraction(v) for v in split_top_level(row)] for row in args.matrix.split(";")]
        coords = grassmannian.plucker_coordinates(rows)
    elif args.coords:
        coords = [as_fraction(v) for v in split_top_level(args.coords)]
    if coords is not None:
        decomposable = grassmannian.is_decomposable(coords)
        payload["coordinates"] = list(coords)
        payload["decomposable"] = decomposable
        lines.append(f"decomposable: {str(decomposable).lower()}")
    return CommandResult((args.command, args.action), payload, "\n".join(lines))


## flag

def flag_schubpoly(args: Namespace) -> CommandResult:
    w = parse_permutation(args.perm)
    return CommandResult((args.command, getattr(args, "action", "schubpoly")), {"perm": w, "poly": flags.schubert_polynomial(w).poly},
                         str(flags.schubert_polynomial(w)))

def flag_monk(args: Namespace) -> CommandResult:
    w = parse_permutation(args.perm)
    return _flag_result(args, flags.monk_multiply(flags.FlClassSum.basis(w), args.i))

def flag_product(args: Namespace) -> CommandResult:
    perms = [parse_permutation(p) for p in args.perm]
    result = flags.FlClassSum.basis(perms[0])
    for w in perms[1:]:
        result = flags.flag_product(result, flags.FlClassSum.basis(w))
    return _flag_result(args, result)

def flag_poincare(args: Namespace) -> CommandResult:
    check_size(args.n, "Flag variety size n")
    poly = flags.flag_poincare(args.n)
    if args.q is None:
        return _poly(args, poly)
    return _poly(args, poly, value=evaluate(poly, [args.q]), points=flags.flag_points_over_field(args.n, args.q))

def flag_stability(args: Namespace) -> CommandResult:
    w = parse_permutation(args.perm)
    stable = flags.stability_check(w, w.n)
    return CommandResult((args.command, args.action), {"stable": stable}, str(stable).lower())


## sym

def sym_schur(args: Namespace) -> CommandResult:
    lam = parse_partition(args.partition)
    check_size(args.k, "Number of variables")
    check_size(lam.size, "Partition size")
    return _poly(args, schur.schur_polynomial(lam, args.k, args.method))

def sym_expand(args: Namespace) -> CommandResult:
    classes = [Partition.parse(item) for item in split_top_level(args.classes)]
    if not classes:
        raise UsageError("No partitions given")
    check_size(sum(lam.size for lam in classes), "Total size")
    expansion = {classes[0]: 1}
    for mu in classes[1:]:
        product: dict[Partition, int] = {}
        for lam, c in expansion.items():
            for nu, d in schur.schur_product(lam, mu).items():
                product[nu] = product.get(nu, 0) + c * d
        expansion = {nu: c for nu, c in product.items() if c}
    return CommandResult((args.command, args.action), {"terms": expansion}, _expansion_text(expansion))

def sym_lr(args: Namespace) -> CommandResult:
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    check_size(lam.size + mu.size, "Total size")
    return _scalar(args, schur.lr_coefficient(lam, mu, nu))


## comb

def comb_partitions(args: Namespace) -> CommandResult:
    if args.size is not None:
        check_size(args.size, "Size")
        found = partitions_of(args.size)
    elif args.k is not None and args.n is not None:
        found = partitions_in_box(_gr_box(args))
    else:
        raise UsageError("Give either --size or both --k and --n")
    return _listing(args, found, [str(lam) for lam in found])

def comb_syt(args: Namespace) -> CommandResult:
    lam = parse_partition(args.partition)
    check_size(lam.size, "Size")
    hooks, count = hooks_and_syt_count(lam)
    payload = {"count": count, "hooks": list(hooks)}
    lines = [str(count)]
    if args.list:
        tableaux = syt_enumerate(lam)
        payload["items"] = [[list(row) for row in t.rows] for t in tableaux]
        lines += [str(t) + "\n" for t in tableaux]
    return CommandResult((args.command, args.action), payload, "\n".join(lines))

def comb_qbinom(args: Namespace) -> CommandResult:
    check_size(args.n, "n")
    poly = q_binomial(args.n, args.k)
    if args.q is None:
        return _poly(args, poly)
    return _poly(args, poly, value=evaluate(poly, [args.q]), points=grassmannian_point_count(args.k, args.n, args.q))

def comb_bruhat(args: Namespace) -> CommandResult:
    check_size(args.n, "Permutation size")
    covers = bruhat_covers(args.n)
    return _listing(args, [[v, w] for v, w in covers], [f"{v} < {w}" for v, w in covers])


## pipedreams

def pipedreams_list(args: Namespace) -> CommandResult:
    w = parse_permutation(args.perm)
    dreams = pipedreams.enumerate_reduced(w)
    items = [
        {"crosses": [list(c) for c in dream.sorted_crosses], "word": str(pipedreams.reading_word(dream)), "rows": list(dream.row_counts())}
        for dream in dreams
    ]
    lines = [pipedreams.render(dream) + "\n" for dream in dreams]
    return _listing(args, items, lines)

def pipedreams_poly(args: Namespace) -> CommandResult:
    return _poly(args, pipedreams.fk_polynomial(parse_permutation(args.perm)))


## gz

def gz_points(args: Namespace) -> CommandResult:
    lam = parse_weight(args.lam)
    points = gz.gz_lattice_points(lam)
    return _listing(args, [[list(row) for row in p.rows] for p in points], [str(p) for p in points])

def gz_faces(args: Namespace) -> CommandResult:
    w = parse_permutation(args.perm)
    faces = gz.enumerate_reduced_kogan_faces(w)
    items = [
        {"equalities": [list(pos) for pos in face.sorted_equalities], "word": str(gz.kogan_face_word(face)), "dimension": gz.face_dimension(face)}
        for face in faces
    ]
    lines = [f"{list(face.sorted_equalities)} {gz.kogan_face_word(face)}" for face in faces]
    return _listing(args, items, lines)

def gz_demazure(args: Namespace) -> CommandResult:
    w, lam = parse_permutation(args.perm), parse_weight(args.lam)
    if args.dim:
        return _scalar(args, gz.demazure_dimension(w, lam))
    character = gz.demazure_character(w, lam)
    payload = {"dimension": character.dimension, "character": dict(character.multiplicities)}
    return CommandResult((args.command, args.action), payload, str(character))

def gz_volume(args: Namespace) -> CommandResult:
    if args.lam:
        lam = parse_weight(args.lam)
        poly = gz.gz_volume_polynomial(lam.n)
        value = evaluate(poly, lam.entries)
        return CommandResult((args.command, args.action), {"poly": poly, "value": value}, str(value))
    if args.n is None:
        raise UsageError("Give --n or --lambda")
    check_size(args.n, "n")
    return _poly(args, gz.gz_volume_polynomial(args.n))

def gz_pairing(args: Namespace) -> CommandResult:
    w, v = parse_permutation(args.perm), parse_permutation(args.other)
    return _scalar(args, gz.kp_pairing(w, v, w.n))

def gz_degree(args: Namespace) -> CommandResult:
    w, lam = parse_permutation(args.perm), parse_weight(args.lam)
    return _scalar(args, gz.flag_schubert_degree(w, lam))


ACTIONS: dict[tuple[str, str], Handler] = {
    (const.COMMAND_GR, "pieri"): gr_pieri,
    (const.COMMAND_GR, "product"): gr_product,
    (const.COMMAND_GR, "degree"): gr_degree,
    (const.COMMAND_GR, "poincare"): gr_poincare,
    (const.COMMAND_GR, "plucker"): gr_plucker,
    (const.COMMAND_FLAG, "schubpoly"): flag_schubpoly,
    (const.COMMAND_FLAG, "monk"): flag_monk,
    (const.COMMAND_FLAG, "product"): flag_product,
    (const.COMMAND_FLAG, "poincare"): flag_poincare,
    (const.COMMAND_FLAG, "stability"): flag_stability,
    (const.COMMAND_SYM, "schur"): sym_schur,
    (const.COMMAND_SYM, "expand"): sym_expand,
    (const.COMMAND_SYM, "lr"): sym_lr,
    (const.COMMAND_COMB, "partitions"): comb_partitions,
    (const.COMMAND_COMB, "syt"): comb_syt,
    (const.COMMAND_COMB, "qbinom"): comb_qbinom,
    (const.COMMAND_COMB, "bruhat"): comb_bruhat,
    (const.COMMAND_PIPEDREAMS, "list"): pipedreams_list,
    (const.COMMAND_PIPEDREAMS, "poly"): pipedreams_poly,
    (const.COMMAND_GZ, "points"): gz_points,
    (const.COMMAND_GZ, "faces"): gz_faces,
    (const.COMMAND_GZ, "demazure"): gz_demazure,
    (const.COMMAND_GZ, "volume"): gz_volume,
    (const.COMMAND_GZ, "pairing"): gz_pairing,
    (const.COMMAND_GZ, "degree"): gz_degree,
}
"Handler for every (command, action) pair"

def dispatch(args: Namespace) -> CommandResult:
    "Runs the handler for the parsed arguments"
    if args.command == const.COMMAND_SCHUBPOLY:
        return flag_schubpoly(args)
    key = (args.command, args.action)
    if key not in ACTIONS:
        raise UsageError(f"Unknown command {' '.join(key)}")
    _LOGGER.debug(f"Running {' '.join(key)}")
    return ACTIONS[key](args)

def run_command(argv: Union[Sequence[str], None] = None) -> CommandResult:
    "Parses ``argv`` and runs the command it names. Errors propagate; ``main`` maps them to exit statuses."
    return dispatch(parse_args(argv))

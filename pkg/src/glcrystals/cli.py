"""Command-line front end: compute, export, and verify.

Subcommands: graph, character, tensor, act, gt, skew-howe, verify.  All
structured output is JSON (DOT for graphs, plain text on request); every
computation is deterministic, so output for a fixed input is byte-stable.
The environment variable CRYSTAL_SEED is reserved but unused.

Exit status: 0 on success or a passing verification, 1 on a verification
failure (the witness is printed), 2 on usage errors or malformed input.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb

from . import gt as gtmod
from . import matrices as mat
from . import tableaux as tab
from .base import format_partition, parse_partition, partitions_in_box
from .cactus import (inner_act, outer_act, parse_word,
                     verify_cactus_relations, verify_reduced_braid)
from .core import (Crystal, Report, character, check_crystal_axioms,
                   export_graph, verify_involution_properties)
from .goldens import GOLDENS
from .gt import check_cgp_homomorphism
from .matrices import (bit_matrices, matrix_col_crystal, matrix_row_crystal,
                       verify_commutation, verify_dual_implementation)
from .skewhowe import (duality_inv, duality_iso, inner_on_cols, inner_on_rows,
                       outer_on_cols, outer_on_rows, verify_agreement,
                       verify_corollary, verify_counting)
from .tableaux import enumerate_b_lambda, tableau_crystal
from .tensor import element_from_json, element_to_json, tensor_crystal


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# model selection helpers

class _PatternCrystal(Crystal):
    """Patterns with operators conjugated through the tableau bijection."""

    def __init__(self, rank):
        super().__init__(rank)
        self._tab = tableau_crystal(rank)

    def weight(self, x):
        return gtmod.beta(x)

    def _lift(self, out):
        return None if out is None else gtmod.tableau_to_gt(out, self.rank)

    def e(self, i, x):
        return self._lift(self._tab.e(i, gtmod.gt_to_tableau(x)))

    def f(self, i, x):
        return self._lift(self._tab.f(i, gtmod.gt_to_tableau(x)))

    def canon(self, x):
        return "/".join(",".join(str(v) for v in row) for row in x)


def _selected_model(args):
    """(crystal, elements) for graph/character selectors."""
    if args.model == "tableau":
        shape = parse_partition(args.shape)
        return tableau_crystal(args.rank), enumerate_b_lambda(shape, args.rank)
    if args.model == "gt":
        shape = parse_partition(args.shape)
        crystal = _PatternCrystal(args.rank)
        elements = sorted(gtmod.patterns_with_top(shape, args.rank),
                          key=crystal.canon)
        return crystal, elements
    if args.model == "matrix":
        if args.n is None or args.m is None or args.N is None:
            raise UsageError("matrix model needs --n, --m and --N")
        elements = list(bit_matrices(args.n, args.m, args.N))
        if args.structure == "row":
            return matrix_row_crystal(args.n, args.m), elements
        return matrix_col_crystal(args.n, args.m), elements
    if args.model == "tensor":
        shapes = [parse_partition(s) for s in args.shapes.split(";")]
        crystal = tensor_crystal(*([tableau_crystal(args.rank)] * len(shapes)))
        pools = [enumerate_b_lambda(s, args.rank) for s in shapes]
        elements = [()]
        for pool in pools:
            elements = [t + (x,) for t in elements for x in pool]
        return crystal, elements
    raise UsageError(f"unknown model {args.model!r}")


def _read_json(path):
    with open(path) as handle:
        return json.load(handle)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_graph(args) -> int:
    crystal, elements = _selected_model(args)
    if args.format != "dot":
        raise UsageError("graph output is DOT; use --format dot")
    _emit(args, export_graph(crystal, elements))
    return 0


def cmd_character(args) -> int:
    from .base import format_weight
    crystal, elements = _selected_model(args)
    char = character(crystal, elements)
    items = sorted(char.items(), reverse=True)
    if args.format == "json":
        payload = {"size": len(elements),
                   "character": {format_weight(w): c for w, c in items}}
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, "\n".join(f"{format_weight(w)}: {c}" for w, c in items))
    return 0


def cmd_tensor(args) -> int:
    from .core import components
    shapes = [parse_partition(s) for s in args.shapes.split(";")]
    crystal = tensor_crystal(*([tableau_crystal(args.rank)] * len(shapes)))
    pools = [enumerate_b_lambda(s, args.rank) for s in shapes]
    elements = [()]
    for pool in pools:
        elements = [t + (x,) for t in elements for x in pool]
    comps = components(crystal, elements, crystal.nodes())
    rows = [{"highest_weight": list(crystal.weight(c.highest)),
             "size": len(c.elements)} for c in comps]
    if args.format == "json":
        _emit(args, json.dumps({"factors": len(shapes), "rank": args.rank,
                                "size": len(elements), "components": rows},
                               indent=2))
    else:
        lines = [f"{len(elements)} elements, {len(comps)} components"]
        lines += [f"  highest weight {tuple(r['highest_weight'])}: "
                  f"size {r['size']}" for r in rows]
        _emit(args, "\n".join(lines))
    return 0


def cmd_act(args) -> int:
    data = _read_json(args.infile)
    if args.model == "matrix":
        M = mat.from_json(data)
        n, m = mat.dims(M)
        if args.structure == "column":
            w = parse_word(args.word, n if args.mode == "inner" else m)
            out = (inner_on_cols if args.mode == "inner" else outer_on_cols)(M, w)
        else:
            w = parse_word(args.word, m if args.mode == "inner" else n)
            out = (inner_on_rows if args.mode == "inner" else outer_on_rows)(M, w)
        _emit(args, mat.to_json(out) if args.format == "json" else mat.to_text(out))
        return 0
    if args.model == "tableau":
        rows, rank = tab.from_json(data)
        if args.mode != "inner":
            raise UsageError("tableaux carry only the inner action")
        out = inner_act(parse_word(args.word, rank), tableau_crystal(rank), rows)
        _emit(args, tab.to_json(out, rank) if args.format == "json" else tab.pretty(out))
        return 0
    if args.model == "gt":
        x = gtmod.from_json(data)
        if args.mode != "inner":
            raise UsageError("patterns carry only the inner action")
        rank = gtmod.rank_of(x)
        acted = inner_act(parse_word(args.word, rank), tableau_crystal(rank),
                          gtmod.gt_to_tableau(x))
        out = gtmod.tableau_to_gt(acted, rank)
        _emit(args, gtmod.to_json(out) if args.format == "json" else gtmod.pretty(out))
        return 0
    if args.model == "tensor":
        crystal, t = element_from_json(data)
        if args.mode == "inner":
            w = parse_word(args.word, crystal.rank)
            out_crystal, out = crystal, inner_act(w, crystal, t)
        else:
            w = parse_word(args.word, len(crystal.factors))
            out_crystal, out = outer_act(w, crystal, t)
        _emit(args, json.dumps(element_to_json(out_crystal, out), indent=2))
        return 0
    raise UsageError(f"model {args.model!r} not supported by act")


def cmd_gt(args) -> int:
    x = gtmod.from_json(_read_json(args.infile))
    for token in (args.moves or "").split():
        kind, idx = token[0], token[1:]
        if kind == "t" and idx.isdigit():
            x = gtmod.bk_move(x, int(idx))
        elif kind == "q" and idx.isdigit():
            x = gtmod.bk_q(x, int(idx))
        else:
            raise UsageError(f"bad move token {token!r}; use t<j> or q<i>")
    if args.to_tableau:
        rows = gtmod.gt_to_tableau(x)
        rank = gtmod.rank_of(x)
        _emit(args, tab.to_json(rows, rank) if args.format == "json"
              else tab.pretty(rows))
        return 0
    if args.beta:
        _emit(args, json.dumps(list(gtmod.beta(x))))
        return 0
    _emit(args, gtmod.to_json(x) if args.format == "json" else gtmod.pretty(x))
    return 0


def cmd_skew_howe(args) -> int:
    M = mat.from_json(_read_json(args.infile))
    pair = duality_iso(M)
    if duality_inv(pair) != M:
        print("round trip failed", file=sys.stderr)
        return 1
    n, m = mat.dims(M)
    payload = {
        "lambda": format_partition(pair.lam),
        "P": json.loads(mat.to_json(pair.p_matrix)),
        "Q": json.loads(mat.to_json(pair.q_matrix)),
        "T_P": json.loads(tab.to_json(pair.t_p, n)),
        "T_Q": json.loads(tab.to_json(pair.t_q, m)),
    }
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, "\n".join([
            f"lambda = {format_partition(pair.lam)}",
            "P:", mat.to_text(pair.p_matrix),
            "Q:", mat.to_text(pair.q_matrix),
            "T_P:", tab.pretty(pair.t_p),
            "T_Q:", tab.pretty(pair.t_q)]))
    return 0


# ---------------------------------------------------------------------------
# verification suites

def _matrix_instances(max_cells: int):
    for n in range(1, max_cells + 1):
        for m in range(1, max_cells + 1):
            if n * m <= max_cells:
                for N in range(0, n * m + 1):
                    yield n, m, N


def _suite_rows(args):
    """(label, cost, thunk) rows for `verify all`; cost is the enumeration
    size used against the budget."""
    rows = []
    for name, check in GOLDENS:
        rows.append((f"golden {name}", 0, check))

    def add_matrix_suite(label, fn, max_cells):
        for n, m, N in _matrix_instances(max_cells):
            cost = comb(n * m, N)
            rows.append((f"{label} n={n} m={m} N={N}", cost,
                         lambda n=n, m=m, N=N: fn(n, m, N)))

    add_matrix_suite("agree", verify_agreement, 12)
    add_matrix_suite("corollary", verify_corollary, 12)
    add_matrix_suite("commute", verify_commutation, 12)
    add_matrix_suite("dual", verify_dual_implementation, 12)

    def axioms_thunk(n, m, N):
        elements = list(bit_matrices(n, m, N))
        rep = check_crystal_axioms(matrix_row_crystal(n, m), elements)
        if rep.ok:
            rep = check_crystal_axioms(matrix_col_crystal(n, m), elements)
        rep.instance.update({"n": n, "m": m, "N": N})
        return rep

    for n, m, N in _matrix_instances(12):
        rows.append((f"axioms n={n} m={m} N={N}", comb(n * m, N),
                     lambda n=n, m=m, N=N: axioms_thunk(n, m, N)))

    def tableau_relations(rank, shape):
        elements = enumerate_b_lambda(shape, rank)
        rep = verify_cactus_relations(tableau_crystal(rank), elements)
        if rep.ok:
            rep = verify_reduced_braid(tableau_crystal(rank), elements)
        rep.instance.update({"rank": rank, "shape": format_partition(shape)})
        return rep

    for rank in (2, 3, 4):
        for size in range(0, 7):
            for shape in partitions_in_box(rank, size, size):
                cost = sum(1 for _ in enumerate_b_lambda(shape, rank))
                rows.append(
                    (f"cactus+braid rank={rank} shape={format_partition(shape)}",
                     cost, lambda r=rank, s=shape: tableau_relations(r, s)))

    def matrix_relations(n, m, N):
        elements = list(bit_matrices(n, m, N))
        rep = verify_cactus_relations(matrix_col_crystal(n, m), elements)
        if rep.ok:
            rep = verify_cactus_relations(matrix_row_crystal(n, m), elements)
        if rep.ok:
            rep = verify_reduced_braid(matrix_row_crystal(n, m), elements)
        if rep.ok:
            rep = verify_reduced_braid(matrix_col_crystal(n, m), elements)
        rep.instance.update({"n": n, "m": m, "N": N})
        return rep

    for n, m, N in _matrix_instances(9):
        rows.append((f"cactus+braid matrix n={n} m={m} N={N}", comb(n * m, N),
                     lambda n=n, m=m, N=N: matrix_relations(n, m, N)))

    for rank in (2, 3, 4):
        for size in range(0, 7):
            for shape in partitions_in_box(rank, size, size):
                cost = sum(1 for _ in gtmod.patterns_with_top(shape, rank))
                rows.append((f"bk rank={rank} shape={format_partition(shape)}",
                             cost,
                             lambda r=rank, s=shape: check_cgp_homomorphism(s, r)))

    def oracle_thunk(rank, shape):
        from .base import schur_bruteforce
        elements = enumerate_b_lambda(shape, rank, cross_check=True)
        char = character(tableau_crystal(rank), elements)
        if char != schur_bruteforce(shape, rank):
            return Report("oracle", {"rank": rank}, 1, "fail",
                          f"character differs from brute force at "
                          f"{format_partition(shape)}")
        return Report("oracle",
                      {"rank": rank, "shape": format_partition(shape)},
                      len(elements), "pass")

    for rank in (2, 3, 4):
        for size in range(0, 7):
            for shape in partitions_in_box(rank, size, size):
                rows.append((f"oracle rank={rank} shape={format_partition(shape)}",
                             1, lambda r=rank, s=shape: oracle_thunk(r, s)))

    for n in (2, 3, 4):
        for m in (2, 3, 4):
            for N in range(0, n * m + 1):
                rows.append((f"counting n={n} m={m} N={N}", comb(n * m, N),
                             lambda n=n, m=m, N=N: verify_counting(n, m, N)))

    def xi_thunk(n, m, N):
        elements = list(bit_matrices(n, m, N))
        rep = verify_involution_properties(matrix_col_crystal(n, m), elements)
        if rep.ok:
            rep = verify_involution_properties(matrix_row_crystal(n, m), elements)
        rep.instance.update({"n": n, "m": m, "N": N})
        return rep

    for n, m, N in _matrix_instances(8):
        rows.append((f"xi matrix n={n} m={m} N={N}", comb(n * m, N),
                     lambda n=n, m=m, N=N: xi_thunk(n, m, N)))

    def xi_tableau(rank, shape):
        elements = enumerate_b_lambda(shape, rank)
        return verify_involution_properties(tableau_crystal(rank), elements)

    for rank, shape in ((3, (2, 1)), (3, (3, 1)), (4, (2, 1, 1)), (4, (3, 2))):
        rows.append((f"xi tableau rank={rank} shape={format_partition(shape)}",
                     sum(1 for _ in enumerate_b_lambda(shape, rank)),
                     lambda r=rank, s=shape: xi_tableau(r, s)))
    return rows


def cmd_verify(args) -> int:
    target = args.target
    # `verify all` defaults to a sub-minute selection; explicit targets get
    # the full library guard.  --budget overrides either way.
    budget = args.budget
    if budget is None:
        budget = 500 if target == "all" else 10 ** 6
    reports: list[tuple[str, Report]] = []

    def run_rows(rows):
        todo = [(label, thunk) for label, cost, thunk in rows
                if cost <= budget or args.force]
        skipped = len(rows) - len(todo)
        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(lambda item: item[1](), todo))
            reports.extend((label, rep) for (label, _), rep in zip(todo, results))
        else:
            reports.extend((label, thunk()) for label, thunk in todo)
        return skipped

    def require_within_budget(rows):
        # an explicitly requested instance over budget is an error, not a
        # silent skip; suites skip instead
        if not args.force:
            for label, cost, _ in rows:
                if cost > budget:
                    raise UsageError(
                        f"{label} enumerates {cost} > budget {budget}; "
                        f"raise --budget or pass --force")
        return rows

    if target == "goldens":
        skipped = run_rows([(f"golden {name}", 0, check)
                            for name, check in GOLDENS])
    elif target == "all":
        skipped = run_rows(_suite_rows(args))
    elif target in ("agree", "corollary", "commute", "dual"):
        fn = {"agree": verify_agreement, "corollary": verify_corollary,
              "commute": verify_commutation,
              "dual": verify_dual_implementation}[target]
        if args.n is None or args.m is None:
            raise UsageError(f"verify {target} needs --n and --m")
        ns = [args.N] if args.N is not None else range(0, args.n * args.m + 1)
        skipped = run_rows(require_within_budget([
            (f"{target} n={args.n} m={args.m} N={N}", comb(args.n * args.m, N),
             lambda N=N: fn(args.n, args.m, N, budget=budget, force=args.force))
            for N in ns]))
    elif target == "counting":
        if args.n is None or args.m is None:
            raise UsageError("verify counting needs --n and --m")
        ns = [args.N] if args.N is not None else range(0, args.n * args.m + 1)
        skipped = run_rows(require_within_budget([
            (f"counting n={args.n} m={args.m} N={N}", comb(args.n * args.m, N),
             lambda N=N: verify_counting(args.n, args.m, N)) for N in ns]))
    elif target == "bk":
        if args.rank is None or args.shape is None:
            raise UsageError("verify bk needs --rank and --shape")
        shape = parse_partition(args.shape)
        skipped = run_rows([
            (f"bk rank={args.rank} shape={args.shape}", 1,
             lambda: check_cgp_homomorphism(shape, args.rank))])
    elif target in ("cactus", "braid", "xi", "axioms"):
        crystal, elements = _selected_model(args)
        fn = {"cactus": verify_cactus_relations,
              "braid": verify_reduced_braid,
              "xi": verify_involution_properties,
              "axioms": check_crystal_axioms}[target]
        skipped = run_rows([(f"{target} {args.model}", len(elements),
                             lambda: fn(crystal, elements))])
    else:
        raise UsageError(f"unknown verify target {target!r}")

    failures = 0
    for label, rep in reports:
        mark = "PASS" if rep.ok else "FAIL"
        line = f"{mark} {label} (checked={rep.checked})"
        if not rep.ok:
            line += f"  witness: {rep.witness}"
            failures += 1
        print(line)
    if skipped:
        print(f"SKIP {skipped} instance(s) over budget {budget}"
              " (raise --budget or pass --force)")
    print(f"{len(reports) - failures}/{len(reports)} passed")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glcrystals",
        description="exact computations and verifiers for gl_k crystals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_model_flags(p):
        p.add_argument("--model", choices=["tableau", "matrix", "tensor", "gt"],
                       default="tableau")
        p.add_argument("--rank", type=int, default=3)
        p.add_argument("--shape", default="")
        p.add_argument("--shapes", default="")
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--structure", choices=["row", "column"], default="column")

    p = sub.add_parser("graph", help="DOT export of a crystal graph")
    add_model_flags(p)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("character", help="weight multiset of a model")
    add_model_flags(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_character)

    p = sub.add_parser("tensor", help="components of a tensor of tableau crystals")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--shapes", required=True,
                   help="semicolon-separated shapes, e.g. '2,1;1'")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("act", help="apply a cactus word to an element")
    p.add_argument("--model",
                   choices=["tableau", "matrix", "tensor", "gt"], required=True)
    p.add_argument("--word", required=True,
                   help="generators act left to right, e.g. 's[1,3] s[2,4]'")
    p.add_argument("--mode", choices=["inner", "outer"], default="inner")
    p.add_argument("--structure", choices=["row", "column"], default="column")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("gt", help="pattern moves, content vector, tableau form")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--moves", default="",
                   help="whitespace-separated tokens t<j> or q<i>")
    p.add_argument("--to-tableau", action="store_true")
    p.add_argument("--beta", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gt)

    p = sub.add_parser("skew-howe", help="duality pair of a 0/1 matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_skew_howe)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("target",
                   choices=["all", "goldens", "agree", "corollary", "commute",
                            "dual", "counting", "bk", "cactus", "braid", "xi",
                            "axioms"])
    add_model_flags(p)
    p.add_argument("--budget", type=int, default=None,
                   help="skip instances enumerating more than this many "
                        "elements; 0 keeps goldens only (default: 500 for "
                        "'all', 1000000 otherwise)")
    p.add_argument("--force", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

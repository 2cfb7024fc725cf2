"""
Handles command line arguments for schubCalc
"""
import argparse
from typing import Optional, Sequence

from . import constants as const
from .logging import LOG_LEVELS


def command_version(*args):
    print(const.VERSION_STRING)
    return 0


def _add_gr_parsers(subparsers, base_parser):
    parser_gr = subparsers.add_parser(const.COMMAND_GR, help="The cohomology ring of the Grassmannian Gr(k,n)")
    actions = parser_gr.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    def box_parser(name, help):
        p = actions.add_parser(name, parents=[base_parser], help=help)
        p.add_argument("--k", type=int, required=True, help="Dimension of the subspaces")
        p.add_argument("--n", type=int, required=True, help="Dimension of the ambient space")
        return p

    p = box_parser("pieri", "Multiply a Schubert class by a special class with the Pieri rule")
    p.add_argument("--partition", default="[]", help="The class to multiply, like [2,1]. Defaults to the unit class")
    p.add_argument("--m", type=int, required=True, help="Number of boxes the special class adds")
    p.add_argument("--kind", choices=("row", "column"), default="row", help="row multiplies by sigma_m, column by sigma_{1^m}")

    p = box_parser("product", "Multiply Schubert classes")
    p.add_argument("--classes", required=True, help="Comma separated classes; an integer m means sigma_m, a bracketed list a partition. For example '1,1,1,1' or '[2,1],1'")

    p = box_parser("degree", "Degree of a Schubert variety in the Pluecker embedding")
    p.add_argument("--partition", default="[]", help="The Schubert class; the empty partition gives the Grassmannian itself")

    p = box_parser("poincare", "The Poincare polynomial")
    p.add_argument("--q", type=int, default=None, help="A prime; also evaluate at it and count the points over GF(q)")

    p = actions.add_parser("plucker", parents=[base_parser], help="Pluecker relations of Gr(2,n) and decomposability of a bivector")
    p.add_argument("--n", type=int, required=True, help="Dimension of the ambient space")
    p.add_argument("--coords", default=None, help="Pluecker coordinates p_ij in lexicographic (i,j) order, comma separated rationals")
    p.add_argument("--matrix", default=None, help="A 2 x n matrix, rows separated by ';', whose row space is tested")

def _add_flag_parsers(subparsers, base_parser):
    parser_flag = subparsers.add_parser(const.COMMAND_FLAG, help="The cohomology ring of the flag variety Fl(n)")
    actions = parser_flag.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    p = actions.add_parser("schubpoly", parents=[base_parser], help="The Schubert polynomial of a permutation")
    p.add_argument("--perm", required=True, help="Permutation in one line notation, like 1432 or 1,10,2,...")

    p = actions.add_parser("monk", parents=[base_parser], help="Multiply by sigma_{s_i} with Monk's rule")
    p.add_argument("--perm", required=True, help="The class to multiply")
    p.add_argument("--i", type=int, required=True, help="Index of the simple transposition")

    p = actions.add_parser("product", parents=[base_parser], help="Multiply Schubert classes")
    p.add_argument("--perm", action="append", required=True, help="A factor; repeat for more factors")

    p = actions.add_parser("poincare", parents=[base_parser], help="The Poincare polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="A prime; also evaluate at it and count the flags over GF(q)")

    p = actions.add_parser("stability", parents=[base_parser], help="Check the Schubert polynomial is unchanged when w is embedded in S_{n+1}")
    p.add_argument("--perm", required=True)

def _add_sym_parsers(subparsers, base_parser):
    parser_sym = subparsers.add_parser(const.COMMAND_SYM, help="Schur polynomials and Littlewood-Richardson coefficients")
    actions = parser_sym.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    p = actions.add_parser("schur", parents=[base_parser], help="A Schur polynomial")
    p.add_argument("--partition", required=True)
    p.add_argument("--k", type=int, required=True, help="Number of variables")
    p.add_argument("--method", choices=("ssyt", "bialternant"), default="ssyt")

    p = actions.add_parser("expand", parents=[base_parser], help="Schur expansion of a product of Schur functions")
    p.add_argument("--classes", required=True, help="Comma separated partitions, like '[2,1],[1]'")

    p = actions.add_parser("lr", parents=[base_parser], help="A Littlewood-Richardson coefficient")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)

def _add_comb_parsers(subparsers, base_parser):
    parser_comb = subparsers.add_parser(const.COMMAND_COMB, help="Partitions, tableaux, q-binomials and the Bruhat order")
    actions = parser_comb.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    p = actions.add_parser("partitions", parents=[base_parser], help="Partitions in the k x (n-k) box, or of a given size")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--size", type=int, default=None)

    p = actions.add_parser("syt", parents=[base_parser], help="Number of standard Young tableaux of a shape")
    p.add_argument("--partition", required=True)
    p.add_argument("--list", action="store_true", help="Also list the tableaux")

    p = actions.add_parser("qbinom", parents=[base_parser], help="The Gaussian binomial coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="A prime; also evaluate at it and count subspaces over GF(q)")

    p = actions.add_parser("bruhat", parents=[base_parser], help="Cover relations of the Bruhat order on S_n")
    p.add_argument("--n", type=int, required=True)

def _add_pipedream_parsers(subparsers, base_parser):
    parser_pd = subparsers.add_parser(const.COMMAND_PIPEDREAMS, help="Reduced pipe dreams of a permutation")
    actions = parser_pd.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    for name, help in (("list", "List the reduced pipe dreams"), ("poly", "Sum of the monomials of the reduced pipe dreams")):
        p = actions.add_parser(name, parents=[base_parser], help=help)
        p.add_argument("--perm", required=True)

def _add_gz_parsers(subparsers, base_parser):
    parser_gz = subparsers.add_parser(const.COMMAND_GZ, help="Gelfand-Zetlin polytopes, Kogan faces and Demazure characters")
    actions = parser_gz.add_subparsers(help="What to compute:", dest="action", metavar="action")
    actions.required = True

    p = actions.add_parser("points", parents=[base_parser], help="Lattice points of the polytope")
    p.add_argument("--lambda", dest="lam", required=True, help="Weakly increasing weight, like 0,1,2")

    p = actions.add_parser("faces", parents=[base_parser], help="Reduced Kogan faces of a permutation")
    p.add_argument("--perm", required=True)

    p = actions.add_parser("demazure", parents=[base_parser], help="Demazure character from the reduced Kogan faces")
    p.add_argument("--perm", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="Strictly increasing weight")
    p.add_argument("--dim", action="store_true", help="Only print the dimension")

    p = actions.add_parser("volume", parents=[base_parser], help="The volume polynomial, or its value at a weight")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--lambda", dest="lam", default=None)

    p = actions.add_parser("pairing", parents=[base_parser], help="Pair two Schubert polynomials through the volume polynomial")
    p.add_argument("--perm", required=True)
    p.add_argument("--other", required=True)

    p = actions.add_parser("degree", parents=[base_parser], help="Degree of a Schubert variety from face volumes")
    p.add_argument("--perm", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="Strictly increasing weight")


def build_parser() -> argparse.ArgumentParser:

    ##Shared options live on base_parser, which every subcommand takes as a parent

    base_parser = argparse.ArgumentParser(add_help=False)
    base_parser.add_argument('--logs', default=argparse.SUPPRESS,
                        choices=LOG_LEVELS, help='set log level manually, takes precedent over the --quiet and --verbose flags. If None are set, it defaults to WARNING')
    base_parser.add_argument('-q', '--quiet', action='store_true', dest='quiet', default=argparse.SUPPRESS,
                        help="Only log critical messages")
    base_parser.add_argument('-v', '--verbose', action='store_true', dest='verbose', default=argparse.SUPPRESS,
                        help="Enables all schubCalc logs")
    base_parser.add_argument('--config', default=argparse.SUPPRESS,
                        help=f"YAML configuration file. Defaults to {const.DEFAULT_CONFIG} in the working directory, if it exists")
    base_parser.add_argument('--output', choices=const.OUTPUT_MODES, default=argparse.SUPPRESS,
                        help="Output format for the result; text unless the configuration says otherwise")

    parser = argparse.ArgumentParser(prog="schubCalc", parents=[base_parser],
                            description="""
                                Exact Schubert calculus: Grassmannians, flag varieties, Schubert polynomials, pipe dreams and Gelfand-Zetlin polytopes.
                            """)

    subparsers = parser.add_subparsers(
        help="The command to run:", dest="command", metavar="command"
    )
    subparsers.required = True

    subparsers.add_parser(const.COMMAND_VERSION, parents=[base_parser],
                        help="Print the schubCalc version, then exits.")

    _add_gr_parsers(subparsers, base_parser)
    _add_flag_parsers(subparsers, base_parser)
    _add_sym_parsers(subparsers, base_parser)
    _add_comb_parsers(subparsers, base_parser)
    _add_pipedream_parsers(subparsers, base_parser)
    _add_gz_parsers(subparsers, base_parser)

    parser_schubpoly = subparsers.add_parser(const.COMMAND_SCHUBPOLY, parents=[base_parser],
                        help="Shorthand for flag schubpoly")
    parser_schubpoly.add_argument("--perm", required=True, help="Permutation in one line notation")

    parser.add_argument(
        "--version",
        action="version",
        version=const.VERSION_STRING,
        help="Prints the schubCalc version and exit.",
    )
    return parser

BASE_DEFAULTS = {"logs": None, "quiet": False, "verbose": False, "config": None, "output": None}
"Values of the shared options when given nowhere on the command line"

def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parses the command line, ``sys.argv`` when ``argv`` is None.

    The shared options may be given before or after the command.
    """
    args = build_parser().parse_args(argv)
    for key, default in BASE_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, default)
    return args

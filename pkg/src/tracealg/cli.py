"""Command-line interface.

Exit codes: 0 on success (and for identity-holds verdicts), 1 when a check
ran and found a counterexample or failure, 2 for usage and validation
errors.  All numeric output is exact (p/q); randomized paths take --seed and
default to seed 0 so runs are reproducible byte for byte.
"""
from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import chident, genmat, jsonio, strata
from .findim import (AlgebraValidationError, ch_degree, recover_weights,
                     trace_kernel)
from .freetrace import TracePoly, parse_trace_poly
from .genrank import generic_algebra_rank
from .pseudochar import GroupValidationError, check_pseudocharacter


def _fail_usage(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


@click.group()
def main():
    """Exact trace-identity and trace-algebra computations."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="Degree of the identity.")
def chpoly(n):
    """Print the degree-n one-variable trace identity."""
    if n < 1:
        _fail_usage("--n must be >= 1")
    click.echo(chident.ch_poly(n).render({1: "x"}))


@main.command()
@click.option("--expr", required=True,
              help="One-variable homogeneous expression, e.g. 'x^2 - tr(x)*x'.")
def polarize(expr):
    """Print the full polarization (multilinear form) of an expression."""
    try:
        p = parse_trace_poly(expr)
        result = chident.polarize(p)
    except ValueError as exc:
        _fail_usage(str(exc))
    click.echo(result.render())


def _builtin_poly(name: str) -> TracePoly:
    if name.startswith("builtin:ch"):
        return chident.ch_poly(int(name[len("builtin:ch"):]))
    if name.startswith("builtin:T"):
        return chident.t_multilinear(int(name[len("builtin:T"):]))
    return parse_trace_poly(name)


@main.command()
@click.option("--poly", required=True,
              help="Expression, builtin:chN, or builtin:Tk.")
@click.option("--size", "size", type=int, required=True, help="Matrix size n.")
@click.option("--random", "trials", type=int, default=0,
              help="Try this many random rational tuples before the symbolic check.")
@click.option("--seed", type=int, default=0, show_default=True)
def verify(poly, size, trials, seed):
    """Decide whether an expression vanishes on all size-n matrices.

    Exit 0 if it is an identity, 1 with a printed witness otherwise.
    """
    try:
        p = _builtin_poly(poly)
    except ValueError as exc:
        _fail_usage(str(exc))
    if size < 1:
        _fail_usage("--size must be >= 1")
    witness = None
    if trials > 0:
        witness = genmat.random_counterexample(p, size, trials=trials, seed=seed)
    if witness is None and not genmat.is_trace_identity(p, size):
        witness = genmat.random_counterexample(p, size, trials=200, seed=seed)
        if witness is None:
            # fall back to generic matrices as the witness description
            click.echo("not an identity (generic evaluation is nonzero)")
            sys.exit(1)
    if witness is not None:
        click.echo(f"counterexample for {poly} at size {size}:")
        for var in sorted(witness):
            rows = [[str(e.constant_value()) for e in row]
                    for row in witness[var].rows]
            click.echo(f"  x{var} = {rows}")
        sys.exit(1)
    click.echo(f"identity: {poly} vanishes on all {size}x{size} matrices")
    sys.exit(0)


@main.group()
def algebra():
    """Operations on structure-constant algebras (JSON input)."""


def _load_algebra_file(path):
    try:
        with open(path) as fh:
            return jsonio.load_algebra(fh)
    except (OSError, jsonio.InputFormatError, AlgebraValidationError) as exc:
        _fail_usage(str(exc))


@algebra.command()
@click.option("--in", "path", required=True, type=click.Path(exists=True))
def kernel(path):
    """Print a basis of the kernel of the trace form."""
    a = _load_algebra_file(path)
    k = trace_kernel(a)
    click.echo(f"kernel dimension: {k.dim}")
    for row in k.rows:
        click.echo("  [" + ", ".join(str(c) for c in row) + "]")


@algebra.command()
@click.option("--in", "path", required=True, type=click.Path(exists=True))
@click.option("--nmax", type=int, default=8, show_default=True)
def chdeg(path, nmax):
    """Print the least degree for which the trace identity holds."""
    a = _load_algebra_file(path)
    diagnostics = []
    n = ch_degree(a, nmax, diagnostics=diagnostics)
    if n is None:
        click.echo(f"none up to n_max={nmax}")
        for line in diagnostics:
            click.echo(f"  {line}")
    else:
        click.echo(str(n))


@algebra.command()
@click.option("--in", "path", required=True, type=click.Path(exists=True))
def weights(path):
    """Recover block weights of a split semisimple algebra (needs blocks)."""
    a = _load_algebra_file(path)
    try:
        wt = recover_weights(a)
    except (ValueError, AlgebraValidationError) as exc:
        _fail_usage(str(exc))
    pairs = " + ".join(f"M{m}(weight {w})" for m, w in zip(wt.sizes, wt.weights))
    click.echo(f"{pairs}; n = {wt.n}")


@algebra.command()
@click.option("--in", "path", required=True, type=click.Path(exists=True))
@click.option("--ell", type=int, default=2, show_default=True,
              help="Number of generic elements.")
@click.option("--seed", type=int, default=0, show_default=True)
def genrank(path, ell, seed):
    """Rank of the generic-element algebra over its trace field."""
    a = _load_algebra_file(path)
    try:
        report = generic_algebra_rank(a, ell, seed=seed)
    except ValueError as exc:
        _fail_usage(str(exc))
    click.echo(f"rank {report.rank} ({report.status})")
    if report.unverified_words:
        click.echo(f"  unverified independents: {report.unverified_words}")
    if not report.stabilized:
        sys.exit(1)


@main.group("pseudochar")
def pseudochar_cmd():
    """Pseudocharacter checks (JSON group and table input)."""


@pseudochar_cmd.command()
@click.option("--group", "group_path", required=True, type=click.Path(exists=True))
@click.option("--char", "char_path", required=True, type=click.Path(exists=True))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--parallel", "workers", type=int, default=0,
              help="Thread count for the tuple scan; the result does not "
                   "depend on it.")
def check(group_path, char_path, seed, workers):
    """Check the degree-n axioms; exit 1 with a witness on failure."""
    try:
        with open(group_path) as fh:
            group = jsonio.load_group(fh)
        with open(char_path) as fh:
            table = jsonio.load_pseudochar(fh, group)
    except (OSError, jsonio.InputFormatError, GroupValidationError) as exc:
        _fail_usage(str(exc))
    report = check_pseudocharacter(table, seed=seed, workers=workers)
    mode = "exhaustive" if report.exhaustive else "sampled (non-exhaustive)"
    if report.passed:
        click.echo(f"pass: degree-{table.degree} pseudocharacter "
                   f"({mode}, {report.tuples_checked} tuples)")
        sys.exit(0)
    if not report.axiom1_ok:
        click.echo(f"fail: t(identity) = {report.axiom1_witness}, "
                   f"expected {table.degree}")
    if not report.axiom2_ok:
        a, b = report.axiom2_witness
        click.echo(f"fail: t(ab) != t(ba) for elements ({a}, {b})")
    if not report.axiom3_ok:
        click.echo(f"fail: alternating trace sum is nonzero on tuple "
                   f"{report.axiom3_witness}")
    sys.exit(1)


@main.command("strata")
@click.option("--n", "n", type=int, required=True)
@click.option("--ell", type=int, required=True)
@click.option("--poset", "poset_format", type=click.Choice(["dot", "json"]),
              default=None, help="Emit the closure poset.")
@click.option("--dims", "show_dims", is_flag=True, help="Print dimension table.")
def strata_cmd(n, ell, poset_format, show_dims):
    """Enumerate stratum types; optionally the closure poset and dimensions."""
    try:
        poset = strata.stratification_poset(n, ell)
    except ValueError as exc:
        _fail_usage(str(exc))
    if poset_format == "dot":
        click.echo(poset.to_dot())
        return
    if poset_format == "json":
        click.echo(poset.to_json())
        return
    click.echo(f"{len(poset.nodes)} stratum types for n={n}, ell={ell}")
    for s in poset.nodes:
        if show_dims:
            d = strata.stratum_dims(s, ell)
            click.echo(f"  {s.label()}: stratum dim {d.stratum_dim}, "
                       f"sheet dim {d.sheet_dim}, stabilizer dim {d.stabilizer_dim} "
                       f"(projective {d.projective_stabilizer_dim})")
        else:
            click.echo(f"  {s.label()}")
    flagged = poset.flagged_edges
    click.echo(f"{len(poset.covers)} covering edges, "
               f"{len(flagged)} of codimension 1")
    for e in flagged:
        click.echo(f"  codim-1: {e.lower.label()} < {e.upper.label()} "
                   "(ell=2, 2x2 block split)")


@main.command()
@click.option("--weights", "weights_text", required=True,
              help="Comma-separated eigenvalue multiplicities, e.g. '1,2'.")
def onevar(weights_text):
    """One-variable diagonal model and its coefficient relation."""
    try:
        mults = tuple(int(x) for x in weights_text.split(","))
    except ValueError:
        _fail_usage("--weights must be comma-separated integers")
    try:
        model = genmat.diagonal_model(mults)
    except ValueError as exc:
        _fail_usage(str(exc))
    click.echo(f"n = {model.size}; multiplicities {model.multiplicities}")
    for j, alpha in enumerate(model.charpoly_coeffs, start=1):
        click.echo(f"  a{j} = {alpha}")
    if any(a >= 2 for a in mults):
        relation = genmat.discriminant_relation(mults)
        click.echo(f"coefficient relation (discriminant): {relation} = 0")
    else:
        click.echo("no forced relation: all multiplicities are 1")


if __name__ == "__main__":
    main()

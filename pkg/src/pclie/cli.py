"""Command line interface.

Exit codes: 0 success, 1 ``commutes`` answered false, 2 usage error,
3 parse error, 4 degree bound too small, 5 verification failure.
"""
from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

import click

from . import expr as ast
from .algebra import build_reduction, bracket, format_element, normal_form
from .centralizer import centralizer_of
from .errors import (DegreeBoundError, GraphError, OrderMismatchError,
                     ParseError, PCLieError, UnknownGeneratorError)
from .graphio import load_graph
from .oracle import structural_kernel, witt_dimension
from .suites import REPORT_FIELDS, SUITES, run_suites
from .words import GeneratorOrder, enumerate_pcls

EXIT_FALSE, EXIT_USAGE, EXIT_PARSE, EXIT_DEGREE, EXIT_VERIFY = 1, 2, 3, 4, 5


@dataclass
class SessionConfig:
    graph_path: str | None
    order: tuple | None
    degree: int | None
    seed: int
    fmt: str

    def graph(self):
        if self.graph_path is None:
            raise click.UsageError("no graph given (use --graph or PCLIE_GRAPH)")
        return load_graph(self.graph_path)

    def generator_order(self, G):
        return GeneratorOrder.for_graph(G, self.order)

    def table(self, required: int):
        """Reduction table of the session graph valid through `required`."""
        G = self.graph()
        O = self.generator_order(G)
        if self.degree is None:
            d = max(required, 1)
        elif self.degree < required:
            raise DegreeBoundError(required, self.degree)
        else:
            d = self.degree
        return build_reduction(O, G, d)


def emit(cfg: SessionConfig, lines: list, data: dict):
    if cfg.fmt == "structured":
        click.echo(json.dumps(data, ensure_ascii=False))
    else:
        for line in lines:
            click.echo(line)


def _parse_order(ctx, param, value):
    if value is None:
        return None
    names = tuple(n.strip() for n in value.replace(">", ",").split(",") if n.strip())
    if len(set(names)) != len(names):
        raise click.BadParameter("generators repeat")
    return names


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--graph", "-g", "graph_path", envvar="PCLIE_GRAPH",
              type=click.Path(dir_okay=False), help="Graph document (YAML or JSON).")
@click.option("--order", callback=_parse_order,
              help="Generator order, greatest first, e.g. 'x,y,z'. Default: declaration order.")
@click.option("--degree", "-d", type=click.IntRange(min=1), envvar="PCLIE_DEGREE",
              help="Degree bound of the reduction table. Default: smallest sufficient.")
@click.option("--seed", type=int, default=0, show_default=True, envvar="PCLIE_SEED")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text",
              show_default=True)
@click.pass_context
def cli(ctx, graph_path, order, degree, seed, fmt):
    """Partially commutative Lie algebras: bases, normal forms, centralizers."""
    ctx.obj = SessionConfig(graph_path, order, degree, seed, fmt)


@cli.command()
@click.option("--max-degree", "-n", type=click.IntRange(min=1))
@click.option("--counts", is_flag=True, help="Print dimensions only.")
@click.option("--plot", type=click.Path(dir_okay=False), help="Also write a dimension chart.")
@click.pass_obj
def basis(cfg: SessionConfig, max_degree, counts, plot):
    """PCLS basis by degree, greatest word first."""
    nmax = max_degree or cfg.degree
    if nmax is None:
        raise click.UsageError("give --max-degree or --degree")
    G = cfg.graph()
    O = cfg.generator_order(G)
    by_degree = enumerate_pcls(O, G, nmax)
    if counts:
        lines = [" ".join(f"{n}:{len(ms)}" for n, ms in by_degree.items())]
        data = {"counts": {str(n): len(ms) for n, ms in by_degree.items()}}
    else:
        words = {n: [m.format(O.names) for m in ms] for n, ms in by_degree.items()}
        lines = [f"{n}: " + " ".join(ws) if ws else f"{n}:" for n, ws in words.items()]
        data = {"basis": {str(n): ws for n, ws in words.items()}}
    emit(cfg, lines, data)
    if plot:
        from .plotting import plot_graded_dimensions

        free = {n: witt_dimension(len(G), n) for n in by_degree}
        plot_graded_dimensions({n: len(ms) for n, ms in by_degree.items()}, plot, free)
    return 0


@cli.command()
@click.argument("expression")
@click.pass_obj
def nf(cfg: SessionConfig, expression):
    """Normal form of EXPRESSION."""
    G = cfg.graph()
    e = ast.parse_expr(expression, G.names)
    T = cfg.table(ast.degree_bound(e))
    text = format_element(normal_form(T, e))
    emit(cfg, [text], {"nf": text})
    return 0


def _two(cfg, a, b):
    G = cfg.graph()
    ea, eb = ast.parse_expr(a, G.names), ast.parse_expr(b, G.names)
    T = cfg.table(ast.degree_bound(ea) + ast.degree_bound(eb))
    return T, normal_form(T, ea), normal_form(T, eb)


@cli.command(name="bracket")
@click.argument("left")
@click.argument("right")
@click.pass_obj
def bracket_cmd(cfg: SessionConfig, left, right):
    """Normal form of [LEFT, RIGHT]."""
    T, g, h = _two(cfg, left, right)
    text = format_element(bracket(T, g, h))
    emit(cfg, [text], {"bracket": text})
    return 0


@cli.command()
@click.argument("left")
@click.argument("right")
@click.pass_obj
def commutes(cfg: SessionConfig, left, right):
    """Print true (exit 0) if [LEFT, RIGHT] = 0, else false (exit 1)."""
    T, g, h = _two(cfg, left, right)
    result = not bracket(T, g, h)
    emit(cfg, ["true" if result else "false"], {"commutes": result})
    return 0 if result else EXIT_FALSE


@cli.command()
@click.argument("expression")
@click.option("--basis-degree", "-k", type=click.IntRange(min=1), default=3, show_default=True,
              help="Truncation degree of the printed centralizer basis.")
@click.pass_obj
def centralizer(cfg: SessionConfig, expression, basis_degree):
    """Describe the centralizer of EXPRESSION."""
    G = cfg.graph()
    e = ast.parse_expr(expression, G.names)
    T = cfg.table(ast.degree_bound(e) + basis_degree)
    g = normal_form(T, e)
    D = centralizer_of(T, g)
    K = structural_kernel(T, D, basis_degree)
    names = T.order.names
    comps = [([names[i] for i in sorted(verts)], format_element(part))
             for verts, part in D.components]
    Y = [names[i] for i in sorted(D.common_neighbors)]
    rows = [format_element(r) for r in K.row_elements(T.order)]
    lines = [f"g: {format_element(g)}"]
    lines += [f"component {{{','.join(vs)}}}: {part}" for vs, part in comps]
    lines.append("common neighbors: {" + ",".join(Y) + "}")
    lines.append(f"basis (degree <= {basis_degree}, dimension {len(rows)}):")
    lines += [f"  {r}" for r in rows]
    data = {"g": format_element(g),
            "components": [{"generators": vs, "element": part} for vs, part in comps],
            "common_neighbors": Y,
            "basis_degree": basis_degree,
            "basis": rows}
    emit(cfg, lines, data)
    return 0


@cli.command()
@click.option("--suite", type=click.Choice(SUITES + ("all",)), default="all", show_default=True)
@click.option("--samples", type=click.IntRange(min=1), default=100, show_default=True,
              help="Random cases per randomized check.")
@click.option("--seed", type=int, default=None, envvar="PCLIE_SEED",
              help="Overrides the session seed.")
@click.option("--plot-dir", type=click.Path(file_okay=False),
              help="Also write figures into this directory.")
@click.pass_obj
def verify(cfg: SessionConfig, suite, samples, seed, plot_dir):
    """Run verification suites on the session graph; exit 5 on any failure."""
    suites = SUITES if suite == "all" else (suite,)
    T = cfg.table(5 if cfg.degree is None else cfg.degree)
    results = run_suites(T, suites, cfg.seed if seed is None else seed, samples)
    ok = all(r.passed for r in results)
    overall = "pass" if ok else "FAIL"
    lines = ["\t".join(REPORT_FIELDS)] + [r.line() for r in results]
    lines.append(f"overall\t{overall}")
    emit(cfg, lines, {"results": [r.as_dict() for r in results], "overall": overall})
    if plot_dir:
        from .plotting import plot_check_summary, plot_graded_dimensions

        counts = {n: len(ms) for n, ms in T.pcls.items()}
        free = {n: witt_dimension(len(T.graph), n) for n in counts}
        plot_graded_dimensions(counts, os.path.join(plot_dir, "dimensions.png"), free)
        plot_check_summary(results, os.path.join(plot_dir, "checks.png"))
    return 0 if ok else EXIT_VERIFY


def main(argv=None) -> int:
    try:
        code = cli.main(args=argv, prog_name="pclie", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except (ParseError, UnknownGeneratorError, GraphError, OrderMismatchError) as exc:
        click.echo(f"parse error: {exc}", err=True)
        return EXIT_PARSE
    except DegreeBoundError as exc:
        click.echo(f"degree error: {exc}", err=True)
        return EXIT_DEGREE
    except FileNotFoundError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except PCLieError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    return code or 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

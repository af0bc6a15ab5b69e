"""Command-line entry point: repl, run, serve, battery, cohort."""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import cnl
from .core import CoreError, Literal
from .harness import CohortPriors, run_battery, simulate_cohort
from .service import SessionStore, Session, create_app, default_ui_dir, \
    run_repl


@click.group()
def main():
    """Cognitive argumentation over conditional knowledge bases."""


@main.command()
@click.option("--store", default=None, help="session store path")
def repl(store):
    """Interactive CNL session."""
    run_repl(SessionStore(store))


@main.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--query", "query_phrase", default=None,
              help="phrase to query (overrides ? statements in the file)")
@click.option("--oracle", "use_oracle", is_flag=True, hidden=True,
              help="answer with the brute-force oracle")
def run(file, query_phrase, use_oracle):
    """Run a statement file and print query answers."""
    with open(file, encoding="utf-8") as fh:
        text = fh.read()
    try:
        statements = cnl.parse_statements(text)
    except cnl.ParseError as ex:
        raise click.ClickException(str(ex))
    s = Session(id="batch")
    queries = []
    for st in statements:
        if isinstance(st, cnl.Query):
            queries.append(st.literal)
            continue
        try:
            if isinstance(st, cnl.AwarenessDecl):
                s.declared_awareness.add(st.atom)
            elif isinstance(st, cnl.FactAssertion):
                s.add_fact(st.literal)
        except CoreError as ex:
            raise click.ClickException(str(ex))
    s.kb = cnl.statements_to_conditionals(statements)
    if query_phrase:
        queries = [cnl.parse_phrase(query_phrase)]
    if not queries:
        raise click.ClickException("no query (use `? <phrase>` or --query)")
    for lit in queries:
        try:
            if use_oracle:
                from .oracle import oracle_query
                f, state = s.compile()
                verdict = oracle_query(lit, f, state)
            else:
                verdict, _ = s.query(lit)
        except CoreError as ex:
            raise click.ClickException(str(ex))
        click.echo(f"? {lit.to_text()}")
        click.echo(cnl.render_explanation(verdict))


@main.command()
@click.option("--port", default=8000, type=int)
@click.option("--host", default="127.0.0.1")
@click.option("--store", default=None, help="session store path")
@click.option("--ui-dir", default=None, help="static web UI directory")
def serve(port, host, store, ui_dir):
    """Serve the HTTP API (and the web UI, if built)."""
    import uvicorn
    app = create_app(SessionStore(store), ui_dir or default_ui_dir())
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.option("--format", "fmt", default="table",
              type=click.Choice(["table", "csv", "json"]))
def battery(fmt):
    """Run the suppression-task battery against the golden grid."""
    rows = run_battery()
    if fmt == "json":
        click.echo(json.dumps(rows, indent=1))
    elif fmt == "csv":
        buf = io.StringIO()
        fields = ["given", "group", "mode", "interpretation",
                  "allow_exogenous", "question", "expected", "actual", "pass"]
        w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore")
        w.writeheader()
        w.writerows(rows)
        click.echo(buf.getvalue().rstrip())
    else:
        for r in rows:
            mark = "ok " if r["pass"] else "FAIL"
            click.echo(f"{mark} {r['given']:6s} {r['group']:3s} "
                       f"{r['mode']:11s} {r['interpretation']:24s} "
                       f"exo={str(r['allow_exogenous']):5s} "
                       f"{r['actual']}")
    failures = sum(1 for r in rows if not r["pass"])
    click.echo(f"{len(rows)} cells, {failures} mismatches")
    if failures:
        sys.exit(1)


@main.command()
@click.option("--priors", "priors_path", required=True,
              type=click.Path(exists=True), help="priors JSON file")
@click.option("--seed", default=0, type=int)
@click.option("--group", default="I", type=click.Choice(["I", "II", "III"]))
@click.option("--given", default="e", help="given fact literal (e, not l, …)")
@click.option("--question", default="l", help="question literal")
def cohort(priors_path, seed, group, given, question):
    """Simulate a cohort of reasoner profiles and report answer frequencies."""
    with open(priors_path, encoding="utf-8") as fh:
        doc = json.load(fh)
    priors = CohortPriors(
        p_necessary_interpretation=doc["p_necessary_interpretation"],
        p_explanatory_mode_given_consequent_fact=doc[
            "p_explanatory_mode_given_consequent_fact"],
        p_allow_exogenous=doc["p_allow_exogenous"],
        sample_count=doc["sample_count"],
    )
    dist = simulate_cohort(priors, group, Literal.from_text(given),
                           Literal.from_text(question), seed=seed)
    click.echo(json.dumps(dist, indent=1))


if __name__ == "__main__":
    main()

"""shqip command line."""
import functools
import sys
from collections import Counter
from pathlib import Path
from typing import List, Optional

import click
from tabulate import tabulate

from shqip import __version__
from shqip.alphabet import sort_key, sort_words
from shqip.analysis.analyzer import Analyzer, load_lexicon
from shqip.analysis.tokenizer import Token, tokenize
from shqip.analysis.types import AnnotatedToken
from shqip.core.config import get_config
from shqip.core.errors import ShqipError
from shqip.core.logger import get_logger
from shqip.lexicon.compiled import build, expand, listing
from shqip.lexicon.entries import load_dic, parse_dic_line, parse_listing, write_dic
from shqip.lexicon.printed import import_printed
from shqip.morphogrammar.numerals import grammar_for, parse_roman
from shqip.morphogrammar.tables import Morphotables
from shqip.paradigm import ParadigmLibrary
from shqip.syntax.grammars import GrammarContext, match_compound_cardinal, match_full_ordinal

logger = get_logger(__name__)

TOP_SHARE = 5


def handle_errors(f):
    """Map domain errors to exit 1 and I/O errors to exit 2."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ShqipError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(1)
        except OSError as e:
            click.echo(f"I/O error: {e}", err=True)
            sys.exit(2)
    return wrapper


def emit_table(ctx: click.Context, rows: List[List[object]], headers: List[str]) -> None:
    if ctx.obj["format"] == "tsv":
        for row in rows:
            click.echo("\t".join(str(cell) for cell in row))
    else:
        click.echo(tabulate(rows, headers=headers, tablefmt="simple"))


@click.group()
@click.version_option(version=__version__, prog_name="shqip")
@click.option("--lexicon", "lexicon_path", type=click.Path(), default=None,
              help="Compiled lexicon, .dic or .flx file (default: configured dictionaries)")
@click.option("--paradigms", type=click.Path(file_okay=False), default=None, help="Paradigm directory")
@click.option("--tables", type=click.Path(file_okay=False), default=None, help="Morphogrammar table directory")
@click.option("--format", "output_format", type=click.Choice(["plain", "tsv"]), default="plain",
              help="Output format")
@click.pass_context
def cli(ctx, lexicon_path, paradigms, tables, output_format):
    """Shqip - Albanian morphological analysis toolkit."""
    config = get_config()
    if paradigms:
        config.paradigms_override = Path(paradigms)
    if tables:
        config.tables_override = Path(tables)
    ctx.obj = {"config": config, "lexicon": lexicon_path, "format": output_format}


@cli.command(name="import")
@click.argument("printed_file", type=click.Path(dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default="imported.dic", help="Entry file to write")
@click.option("--problems", "problems_path", type=click.Path(dir_okay=False), default="problems.txt",
              help="Problem list to write")
@click.pass_context
@handle_errors
def import_cmd(ctx, printed_file, out_path, problems_path):
    """Turn printed-dictionary lines into dictionary entries.

    PRINTED_FILE: one printed entry per line
    """
    config = ctx.obj["config"]
    library = ParadigmLibrary.from_config(config)
    lines = Path(printed_file).read_text(encoding="utf-8").splitlines()
    endings = config.section("lexicon").get("ambigen_plural_endings", ["e"])
    report = import_printed(lines, library, endings)

    write_dic(report.entries, out_path)
    Path(problems_path).write_text("".join(f"{line}\n" for line in report.problem_lines()), encoding="utf-8")
    click.echo(f"{len(report.entries)} entries, {len(report.problems)} problems")


@cli.command(name="compile")
@click.argument("sources", nargs=-1, type=click.Path(dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default="lexicon.sqmf",
              help="Compiled lexicon to write")
@click.pass_context
@handle_errors
def compile_cmd(ctx, sources, out_path):
    """Compile .dic entries (or .flx listings) into a minimized lexicon.

    SOURCES: .dic or .flx files (default: configured dictionaries)
    """
    config = ctx.obj["config"]
    paths = [Path(s) for s in sources] or config.dictionary_paths
    listings = [p for p in paths if p.suffix == ".flx"]
    dictionaries = [p for p in paths if p.suffix != ".flx"]

    pairs = []
    if dictionaries:
        library = ParadigmLibrary.from_config(config)
        entries = [entry for path in dictionaries for entry in load_dic(path)]
        pairs.extend(expand(entries, library))
    for path in listings:
        pairs.extend(parse_listing(path.read_text(encoding="utf-8"), str(path)))

    lexicon = build(pairs)
    size = lexicon.save(out_path)
    stats = lexicon.stats
    emit_table(ctx, [
        ["states", stats.states],
        ["transitions", stats.transitions],
        ["forms", stats.forms],
        ["surfaces", stats.surfaces],
        ["bytes", size],
    ], ["statistic", "value"])


@cli.command()
@click.argument("lemma_or_entry")
@click.pass_context
@handle_errors
def inflect(ctx, lemma_or_entry):
    """Print the .flx listing of a lemma or of a literal entry line.

    LEMMA_OR_ENTRY: a lemma from the dictionaries, or 'lemma,CAT+FLX=Name+feats'
    """
    config = ctx.obj["config"]
    library = ParadigmLibrary.from_config(config)
    if "," in lemma_or_entry:
        entries = [parse_dic_line(lemma_or_entry, "<argument>")]
    else:
        entries = [
            entry for path in config.dictionary_paths for entry in load_dic(path)
            if entry.lemma == lemma_or_entry
        ]
    if not entries:
        raise ShqipError(f"no entry for '{lemma_or_entry}'")
    for line in listing(expand(entries, library)):
        click.echo(line)


def _render_token(token: AnnotatedToken) -> str:
    return " || ".join(a.render() for a in token.analyses)


def _text_or_file(text_or_file: str) -> str:
    path = Path(text_or_file)
    try:
        is_file = path.is_file()
    except OSError:
        # inline text longer than a file name can be
        is_file = False
    return path.read_text(encoding="utf-8") if is_file else text_or_file


@cli.command()
@click.argument("text_or_file")
@click.pass_context
@handle_errors
def analyze(ctx, text_or_file):
    """Annotate text: one line per token, spans after each sentence.

    TEXT_OR_FILE: a file path, or the text itself
    """
    config = ctx.obj["config"]
    text = _text_or_file(text_or_file)
    lexicon = load_lexicon(config, ctx.obj["lexicon"])
    analyzer = Analyzer.from_config(config, lexicon)

    for sentence in analyzer.analyze(text):
        if ctx.obj["format"] == "tsv":
            for token in sentence.tokens:
                click.echo(f"{token.surface}\t{token.offset}\t{_render_token(token)}")
        else:
            rows = [[t.surface, t.offset, "" if t.span_id is None else t.span_id, _render_token(t)]
                    for t in sentence.tokens]
            click.echo(tabulate(rows, headers=["token", "offset", "span", "analyses"], tablefmt="simple"))
        for span in sentence.spans:
            span_id = sentence.tokens[span.start].span_id
            surface = " ".join(t.surface for t in sentence.tokens[span.start:span.end])
            readings = " || ".join(a.render() for a in span.analyses)
            click.echo(f"#span\t{span_id}\t{span.rule}\t{surface}\t{readings}")


@cli.command(name="sort")
@click.argument("word_file", type=click.File("r", encoding="utf-8"), default="-")
@handle_errors
def sort_cmd(word_file):
    """Sort words in Albanian alphabetical order.

    WORD_FILE: one word per line (default: standard input)
    """
    words = [line.strip() for line in word_file if line.strip()]
    for word in sort_words(words):
        click.echo(word)


def _number_of(text: str, ctx_obj) -> Optional[str]:
    config = ctx_obj["config"]
    tables = Morphotables.from_config(config)
    grammar = grammar_for(tables.numerals)

    if text.isdigit():
        return grammar.render_cardinal_word(int(text))
    roman = parse_roman(text)
    if roman is not None:
        return str(roman)

    tokens = [AnnotatedToken(t.surface, t.offset) for t in tokenize(text)]
    if len(tokens) == 1:
        value = grammar.parse_cardinal_word(tokens[0].surface)
        if value is None:
            value = grammar.parse_ordinal(tokens[0].surface)
        return None if value is None else str(value)

    context = GrammarContext(lexicon=build([]), numerals=grammar, link=tables.numerals.link)
    for grammar_fn in (match_compound_cardinal, match_full_ordinal):
        spans = grammar_fn(tokens, context)
        if len(spans) == 1 and spans[0].start == 0 and spans[0].end == len(tokens):
            return str(spans[0].value)
    return None


@cli.command()
@click.argument("words", nargs=-1, required=True)
@click.pass_context
@handle_errors
def number(ctx, words):
    """Convert between numeral words and values.

    WORDS: a value (41), a Roman numeral (XIV) or numeral words (dyzet e një)
    """
    text = " ".join(words)
    try:
        result = _number_of(text, ctx.obj)
    except ValueError as e:
        raise ShqipError(str(e)) from e
    if result is None:
        raise ShqipError(f"'{text}' is not a numeral")
    click.echo(result)


def frequency_rows(tokens: List[Token]) -> List[List[object]]:
    """[token, count, percent] rows, most frequent first, ties in alphabetical order."""
    counts = Counter(t.surface.lower() for t in tokens)
    total = sum(counts.values())
    ordered = sorted(counts.items(), key=lambda item: (-item[1], sort_key(item[0])))
    hundredths = share_hundredths([count for _, count in ordered], total)
    return [[word, count, f"{h // 100}.{h % 100:02d}"] for (word, count), h in zip(ordered, hundredths)]


def share_hundredths(counts: List[int], total: int) -> List[int]:
    """Percent shares in hundredths, summing to exactly 10000 (largest remainder)."""
    if not counts:
        return []
    floors = [count * 10000 // total for count in counts]
    leftover = 10000 - sum(floors)
    by_remainder = sorted(range(len(counts)), key=lambda i: (-(counts[i] * 10000 % total), i))
    for i in by_remainder[:leftover]:
        floors[i] += 1
    return floors


@cli.command()
@click.argument("text_file", type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def stats(ctx, text_file):
    """Token frequencies with the cumulative share of the five most frequent.

    TEXT_FILE: UTF-8 text
    """
    tokens = tokenize(Path(text_file).read_text(encoding="utf-8"))
    rows = frequency_rows(tokens)
    emit_table(ctx, rows, ["token", "count", "%"])
    if tokens:
        top = sum(row[1] for row in rows[:TOP_SHARE])
        click.echo(f"top {TOP_SHARE}: {100 * top / len(tokens):.2f}%")
    click.echo(f"tokens: {len(tokens)}, types: {len(rows)}")


if __name__ == "__main__":
    cli()

"""Dictionary entries, printed-dictionary import and the compiled lexicon."""
from shqip.lexicon.compiled import CompiledLexicon, build, compile_lexicon, expand, listing
from shqip.lexicon.entries import LexEntry, Payload, load_dic, parse_dic, parse_listing, write_dic
from shqip.lexicon.printed import PrintedEntry, assign_paradigm, import_printed, parse_printed

__all__ = [
    "CompiledLexicon",
    "LexEntry",
    "Payload",
    "PrintedEntry",
    "assign_paradigm",
    "build",
    "compile_lexicon",
    "expand",
    "import_printed",
    "listing",
    "load_dic",
    "parse_dic",
    "parse_listing",
    "parse_printed",
    "write_dic",
]

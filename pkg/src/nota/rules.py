"""The NOTA rules as independent detectors producing span diagnostics.

Rule ids are stable public strings. Each rule is a pure function of its
token window, the lexicon and the rule tables; replacements converge:
re-running a rule on its own replacement yields nothing.

Severities drive fix mode: Error fixes are always safe to apply,
Warning fixes carry lexicon evidence, Info is a suggestion only (the
pronoun rule flags a genuinely ambiguous reading and is never applied).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from typing import Callable, Mapping

from .lexicon import Lexicon
from .script import (
    ALEF,
    ALEF_MAQSURA,
    KASRA,
    LAM,
    NOTA_MARKS,
    TEH,
    WAW,
    ZWARAKAY,
    is_arabic_mark,
    iter_clusters,
)
from .tokenize import Token, TokenKind

# Priority order: character-level fixes, then word-level, then splits.
RULE_PRIORITY = ("R-VOW", "R-CONS", "R-ART", "R-AMQ", "R-IMP", "R-FUT", "R-PRON", "R-SEP")
RULE_IDS = frozenset(RULE_PRIORITY)

# Fused preposition+article spellings expanded to two tokens.  The
# single-letter proclitics ب and ل stay attached.
DEFAULT_FUSED_PREPOSITIONS: Mapping[str, str] = {
    "فال": "في ال",
    "عال": "على ال",
    "مال": "من ال",
}


class Severity(Enum):
    ERROR = auto()    # safe auto-fix
    WARNING = auto()  # lexicon-backed fix
    INFO = auto()     # suggestion only, never applied


@dataclass(frozen=True)
class Diagnostic:
    rule: str
    start: int
    end: int
    severity: Severity
    message: str
    replacement: str | None = None


@dataclass(frozen=True)
class RuleWindow:
    """A word token with its neighbouring word tokens (across spaces only)."""

    word: Token
    prev_word: Token | None = None
    next_word: Token | None = None


class NotSecondPersonError(ValueError):
    pass


def derive_imperative(present_2sg: str) -> str:
    """Imperative = the 2sg present form minus its leading ت."""
    if not present_2sg.startswith(TEH):
        raise NotSecondPersonError(f"{present_2sg!r} does not start with ت")
    return present_2sg[1:]


def _bare(text: str) -> str:
    """Letters only: drop every Arabic combining mark, canonical or not."""
    return "".join(ch for ch in text if not is_arabic_mark(ch))


def _letter_offsets(text: str) -> list[int]:
    return [i for i, ch in enumerate(text) if not is_arabic_mark(ch)]


def _respell(word_text: str, bare_to: str) -> str:
    """Apply a bare respelling to a word, keeping its marks in place."""
    out = []
    k = 0
    for ch in word_text:
        if is_arabic_mark(ch):
            out.append(ch)
        else:
            out.append(bare_to[k] if k < len(bare_to) else ch)
            k += 1
    return "".join(out)


# --- rules ----------------------------------------------------------------


def rule_cons(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-CONS: canonical spellings for /p v g/.

    Regional variant letters rewrite unconditionally; ق→ڨ only for the
    words the lexicon lists with a /g/ reading.
    """
    word = window.word
    out: list[Diagnostic] = []
    for i, ch in enumerate(word.text):
        canonical = lex.variant_map.get(ch)
        if canonical:
            out.append(
                Diagnostic(
                    "R-CONS",
                    word.start + i,
                    word.start + i + 1,
                    Severity.ERROR,
                    f"variant letter {ch}; the canonical letter is {canonical}",
                    canonical,
                )
            )
    if not out:
        bare = _bare(word.text)
        respelled = lex.gaf_words.get(bare)
        if respelled and respelled != bare:
            out.append(
                Diagnostic(
                    "R-CONS",
                    word.start,
                    word.end,
                    Severity.WARNING,
                    "word is pronounced with /g/; spell it with ڨ",
                    _respell(word.text, respelled),
                )
            )
    return out


def rule_vow(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-VOW: long /ɛ/ is Zwarakay+Alef, and only the four vowel marks exist."""
    word = window.word
    out: list[Diagnostic] = []
    text = word.text
    for i, ch in enumerate(text):
        if ch == KASRA and i + 1 < len(text) and text[i + 1] == ALEF:
            out.append(
                Diagnostic(
                    "R-VOW",
                    word.start + i,
                    word.start + i + 1,
                    Severity.ERROR,
                    "long /ɛ/ written Kasra+Alef; use Zwarakay+Alef",
                    ZWARAKAY,
                )
            )
        elif is_arabic_mark(ch) and ch not in NOTA_MARKS:
            out.append(
                Diagnostic(
                    "R-VOW",
                    word.start + i,
                    word.start + i + 1,
                    Severity.ERROR,
                    f"non-NOTA diacritic U+{ord(ch):04X}",
                    "",
                )
            )
    return out


def rule_art(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-ART: the definite article ال carries no diacritics."""
    word = window.word
    clusters = iter_clusters(word.text)
    if len(clusters) < 2:
        return []
    first, second = clusters[0], clusters[1]
    if first.base != ALEF or second.base != LAM:
        return []
    if not first.marks and not second.marks:
        return []
    return [
        Diagnostic(
            "R-ART",
            word.start,
            word.start + second.end,
            Severity.ERROR,
            "definite article is written without diacritics",
            ALEF + LAM,
        )
    ]


def rule_amq(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-AMQ: final ى iff the verb's present 3sg ends in long /i/, else ا."""
    word = window.word
    bare = _bare(word.text)
    if not bare or bare[-1] not in (ALEF, ALEF_MAQSURA):
        return []
    pos = _letter_offsets(word.text)[-1]
    span = (word.start + pos, word.start + pos + 1)
    entry = lex.lookup_citation_folded(bare)
    if entry is not None:
        expected = ALEF_MAQSURA if entry.present_ends_long_i else ALEF
        if bare[-1] == expected:
            return []
        why = "ends in long /i/" if entry.present_ends_long_i else "does not end in long /i/"
        return [
            Diagnostic(
                "R-AMQ",
                *span,
                Severity.WARNING,
                f"present form {entry.present_3sg} {why}; final letter should be {expected}",
                expected,
            )
        ]
    if bare in lex.known_words:
        return []
    listed = lex.known_spelling_for(bare)
    if listed is not None and listed != bare:
        return [
            Diagnostic(
                "R-AMQ",
                *span,
                Severity.WARNING,
                f"listed spelling is {listed}",
                listed[-1],
            )
        ]
    return [
        Diagnostic(
            "R-AMQ",
            *span,
            Severity.INFO,
            "final-vowel spelling unverified (word not in lexicon)",
            None,
        )
    ]


def rule_imp(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-IMP: irregular imperatives regularize to 2sg-present minus ت."""
    word = window.word
    entry = lex.lookup_irregular_imperative(word.text)
    if entry is None or not entry.present_2sg or not entry.present_2sg.startswith(TEH):
        return []
    regular = derive_imperative(entry.present_2sg)
    if regular == _bare(word.text):
        return []
    return [
        Diagnostic(
            "R-IMP",
            word.start,
            word.end,
            Severity.WARNING,
            f"irregular imperative; the regular form is {regular}",
            regular,
        )
    ]


def rule_fut(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-FUT: باش before an imperfective verb is the future marker بش."""
    word = window.word
    if _bare(word.text) != "باش":
        return []
    nxt = window.next_word
    if nxt is None or not lex.matches_imperfective(nxt.text):
        return []
    return [
        Diagnostic(
            "R-FUT",
            word.start,
            word.end,
            Severity.WARNING,
            "future marker before a verb is written بش (باش means 'with what')",
            "بش",
        )
    ]


def rule_pron(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-PRON: negated verb + وش may hide an object pronoun; suggest هو.

    The sentence is genuinely ambiguous, so this is informational only.
    """
    word = window.word
    bare = _bare(word.text)
    prev = window.prev_word
    prev_bare = _bare(prev.text) if prev is not None else None

    candidates: list[tuple[str, str]] = []
    if prev_bare in ("ما", "م"):
        candidates.append((bare, ""))
    if bare.startswith("م") and len(bare) > 1:
        candidates.append((bare[1:], "م"))

    for cand, prefix in candidates:
        if len(cand) > 2 and cand.endswith("وش") and lex.is_citation(cand[:-2]):
            suggestion = prefix + cand[:-2] + "هوش"
            return [
                Diagnostic(
                    "R-PRON",
                    word.start,
                    word.end,
                    Severity.INFO,
                    "negated verb may hide an object pronoun; هو makes it explicit",
                    suggestion,
                )
            ]
    return []


def rule_sep(window: RuleWindow, lex: Lexicon, fused: Mapping[str, str]) -> list[Diagnostic]:
    """R-SEP: prepositions and the conjunction و stay separate words."""
    word = window.word
    bare = _bare(word.text)
    if len(bare) < 2 or bare in lex.known_words or bare in lex.prepositions:
        return []

    def known_or_definite(s: str) -> bool:
        if s in lex.known_words:
            return True
        return len(s) > 2 and s.startswith(ALEF + LAM) and s[2:] in lex.known_words

    offsets = _letter_offsets(word.text)

    def split_after(n_letters: int) -> str:
        k = offsets[n_letters]
        return word.text[:k] + " " + word.text[k:]

    def diag(message: str, replacement: str) -> list[Diagnostic]:
        return [
            Diagnostic("R-SEP", word.start, word.end, Severity.WARNING, message, replacement)
        ]

    for fused_form in sorted(fused, key=len, reverse=True):
        if bare.startswith(fused_form) and len(bare) > len(fused_form):
            rest = bare[len(fused_form):]
            if rest in lex.known_words:
                k = offsets[len(fused_form)]
                return diag(
                    f"fused preposition; write {fused[fused_form]} separately",
                    fused[fused_form] + word.text[k:],
                )
    for prep in sorted(lex.prepositions, key=len, reverse=True):
        if len(prep) >= 2 and bare.startswith(prep) and len(bare) > len(prep):
            if known_or_definite(bare[len(prep):]):
                return diag(
                    f"preposition {prep} is written separate from the noun",
                    split_after(len(prep)),
                )
    if bare[0] == WAW and known_or_definite(bare[1:]):
        return diag(
            "the conjunction و is written separate from the following word",
            split_after(1),
        )
    return []


_RULES: Mapping[str, Callable[[RuleWindow, Lexicon, Mapping[str, str]], list[Diagnostic]]] = {
    "R-VOW": rule_vow,
    "R-CONS": rule_cons,
    "R-ART": rule_art,
    "R-AMQ": rule_amq,
    "R-IMP": rule_imp,
    "R-FUT": rule_fut,
    "R-PRON": rule_pron,
    "R-SEP": rule_sep,
}


def windows(tokens: list[Token]) -> list[RuleWindow]:
    """Word tokens paired with their word neighbours across spaces only.

    Punctuation or foreign material breaks adjacency, so a sentence-final
    باش never sees a verb on the other side of a full stop.
    """
    out: list[RuleWindow] = []
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.WORD:
            continue
        prev_word = None
        j = i - 1
        while j >= 0 and tokens[j].kind is TokenKind.SPACE:
            j -= 1
        if j >= 0 and tokens[j].kind is TokenKind.WORD:
            prev_word = tokens[j]
        next_word = None
        j = i + 1
        while j < len(tokens) and tokens[j].kind is TokenKind.SPACE:
            j += 1
        if j < len(tokens) and tokens[j].kind is TokenKind.WORD:
            next_word = tokens[j]
        out.append(RuleWindow(tok, prev_word, next_word))
    return out


def run_rules(
    tokens: list[Token],
    lex: Lexicon,
    enabled: Mapping[str, bool] | None = None,
    fused_prepositions: Mapping[str, str] | None = None,
) -> list[Diagnostic]:
    """Run the enabled rules over all word windows, in deterministic order."""
    fused = DEFAULT_FUSED_PREPOSITIONS if fused_prepositions is None else fused_prepositions
    active = [
        rid for rid in RULE_PRIORITY if enabled is None or enabled.get(rid, True)
    ]
    out: list[Diagnostic] = []
    for window in windows(tokens):
        for rid in active:
            out.extend(_RULES[rid](window, lex, fused))
    out.sort(key=lambda d: (d.start, d.rule))
    return out

"""Command-line front end.

Exit codes: 0 success / Accepted / decisive answer, 1 usage or input error,
2 Unknown / budget exhausted.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import constructions, greens, semidecide, stallings
from .munn import munn_tree
from .normal_forms import (
    Answer,
    FreeGroupOracle,
    HnnOracle,
    cyclic_group_oracle,
    free_group_oracle,
    free_product,
)
from .presentations import (
    ParseError,
    PresentationKind,
    parse_presentation,
    serialize_presentation,
    validate,
)
from .words import Alphabet, Word, WordError, word_from_text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_presentation(path):
    return parse_presentation(_read_text(path))


_IDENT_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")


def _infer_alphabet(texts):
    names = []
    for text in texts:
        for tok in _IDENT_RE.findall(text):
            if tok not in names:
                names.append(tok)
    return Alphabet(tuple(names))


def _parse_letters(spec):
    return tuple(s.strip() for s in spec.split(",") if s.strip())


def parse_structure(spec: str, alphabet=None):
    """Build an oracle tower from an explicit structure annotation.

    Grammar: ``free`` | ``cyclic:N`` | ``fp:FACTOR=letters;...`` with FACTOR
    in {free, cyclic:N} | ``hnn:base=letters;stable=name;assoc=w1|w2|...``.
    """
    if spec == "free":
        if alphabet is None:
            raise ValueError("structure 'free' needs an alphabet")
        return free_group_oracle(alphabet)
    if spec.startswith("cyclic:"):
        order = int(spec.split(":", 1)[1])
        if alphabet is None or len(alphabet) != 1:
            raise ValueError("structure 'cyclic:n' needs a one-letter alphabet")
        return cyclic_group_oracle(alphabet, order)
    if spec.startswith("fp:"):
        factors = []
        for part in spec[3:].split(";"):
            head, _, letters = part.partition("=")
            sub = Alphabet(_parse_letters(letters))
            if head == "free":
                factors.append(free_group_oracle(sub))
            elif head.startswith("cyclic:"):
                factors.append(cyclic_group_oracle(sub, int(head.split(":", 1)[1])))
            else:
                raise ValueError(f"unknown free-product factor {head!r}")
        return free_product(factors, alphabet)
    if spec.startswith("hnn:"):
        fields = dict(part.partition("=")[::2] for part in spec[4:].split(";"))
        base_alphabet = Alphabet(_parse_letters(fields["base"]))
        base = free_group_oracle(base_alphabet)
        assoc_words = [
            word_from_text(base_alphabet, t)
            for t in fields.get("assoc", "").split("|")
            if t.strip()
        ]
        subgroup = stallings.build_subgroup(base_alphabet, assoc_words)
        membership = lambda w: (
            Answer.EQUAL if stallings.contains(subgroup, w) else Answer.NOT_EQUAL
        )
        return HnnOracle(base, fields.get("stable", "t"), membership)
    raise ValueError(f"unknown structure {spec!r}")


def _report(report):
    lines = ["raw:"]
    for w in report.raw:
        lines.append(f"  {w}  # relator {report.notes[w]}")
    lines.append("nontrivial:")
    for w in report.nontrivial:
        lines.append(f"  {w}")
    return "\n".join(lines)


def _cmd_parse(args):
    p = _load_presentation(args.file)
    diagnostics = validate(p)
    for d in diagnostics:
        print(f"diagnostic: {d}")
    print(
        f"ok: {p.kind.value} presentation, "
        f"{len(p.alphabet)} generators, {len(p.relations)} relations"
    )
    return 0 if not diagnostics else 1


def _cmd_print(args):
    print(serialize_presentation(_load_presentation(args.file)))
    return 0


def _cmd_prefixes(args):
    print(_report(constructions.prefix_generators(_load_presentation(args.file))))
    return 0


def _cmd_ru_prefixes(args):
    print(_report(constructions.ru_generators(_load_presentation(args.file))))
    return 0


def _cmd_transform(args):
    p = _load_presentation(args.file)
    which = args.which
    if which == "mon2gp":
        out = [constructions.monoid_to_group(p)]
    elif which == "star":
        if not args.subset:
            raise SystemExit(_usage_error("star requires --subset"))
        out = [constructions.star_construction(p, _parse_letters(args.subset))]
    elif which == "freegen":
        out = [constructions.add_free_generator(p)]
    elif which == "restrict":
        out = [constructions.group_case_restriction(p)]
    elif which == "mt":
        out = [
            constructions.special_inverse_of_rc(p),
            constructions.special_inverse_of_rc_relations(p),
        ]
    elif which == "mqw":
        if not p.is_special:
            raise SystemExit(_usage_error("mqw requires a special presentation"))
        words = [word_from_text(p.alphabet, t) for t in (args.words or "").split(",") if t.strip()]
        out = list(
            constructions.build_mqw(
                p.alphabet, p.relators, words, stable=args.stable or "t"
            )
        )
    elif which == "hnn":
        words = [word_from_text(p.alphabet, t) for t in (args.words or "").split(",") if t.strip()]
        out = [
            constructions.hnn_identity_extension(p, words, stable=args.stable or "z")
        ]
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(1)
    for q in out:
        print(serialize_presentation(q))
    return 0


def _usage_error(msg):
    print(f"error: {msg}", file=sys.stderr)
    return 1


def _answer_exit(answer):
    print(answer.value)
    return 0 if answer in (Answer.EQUAL, Answer.NOT_EQUAL) else 2


def _cmd_eq(args):
    alphabet = (
        Alphabet(_parse_letters(args.alphabet))
        if args.alphabet
        else _infer_alphabet([args.u, args.v])
    )
    oracle = parse_structure(args.structure, alphabet)
    u = word_from_text(oracle.alphabet, args.u)
    v = word_from_text(oracle.alphabet, args.v)
    return _answer_exit(oracle.decide(u, v))


def _cmd_munn(args):
    alphabet = (
        Alphabet(_parse_letters(args.alphabet))
        if args.alphabet
        else _infer_alphabet([args.word])
    )
    w = word_from_text(alphabet, args.word)
    tree = munn_tree(w)
    verts = sorted(tree.vertices, key=lambda t: (len(t), t))
    names = [str(Word(alphabet, v)) for v in verts]
    print("vertices: " + ", ".join(names))
    print("terminal: " + str(Word(alphabet, tree.terminal)))
    return 0


def _submonoid(args, texts):
    alphabet = (
        Alphabet(_parse_letters(args.alphabet))
        if args.alphabet
        else _infer_alphabet(texts)
    )
    oracle = parse_structure(args.structure, alphabet)
    gens = [word_from_text(oracle.alphabet, t) for t in args.gens.split("|") if t.strip()]
    return greens.AmbientSubmonoid(oracle, gens)


def _cmd_ball(args):
    m = _submonoid(args, [args.gens])
    for w in greens.ball(m, args.radius):
        print(w)
    return 0


def _cmd_units(args):
    m = _submonoid(args, [args.gens])
    units = greens.unit_generators_in_ball(m, args.radius)
    for w in units:
        print(w)
    return 0


def _cmd_schutz(args):
    m = _submonoid(args, [args.gens, args.unit_gens, args.x])
    if not isinstance(m.oracle, FreeGroupOracle):
        return _usage_error("schutz requires --structure free")
    unit_words = [
        word_from_text(m.oracle.alphabet, t) for t in args.unit_gens.split("|") if t.strip()
    ]
    m.unit_subgroup = stallings.build_subgroup(m.oracle.alphabet, unit_words)
    x = word_from_text(m.oracle.alphabet, args.x)
    aut = greens.schutz_free_ambient(m, x)
    print(f"states: {aut.num_states}")
    print(f"rank: {stallings.rank(aut)}")
    body = stallings.dump(aut)
    if body:
        print(body)
    return 0


def _cmd_prove(args):
    p = _load_presentation(args.file)
    u = word_from_text(p.alphabet, args.u)
    v = word_from_text(p.alphabet, args.v)
    if args.rc:
        task = semidecide.rc_close(p, u, v)
    else:
        task = semidecide.brute_force_equal(p, u, v)
    for k in range(args.steps):
        if task.step() is semidecide.Outcome.ACCEPTED:
            print(f"accepted after {k + 1} steps")
            return 0
    print(f"unknown after {args.steps} steps")
    return 2


def build_parser():
    parser = _Parser(prog="prefixmon")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("parse", _cmd_parse, help="parse and validate a presentation file")
    p.add_argument("file")
    p = add("print", _cmd_print, help="print the canonical form of a presentation")
    p.add_argument("file")
    p = add("prefixes", _cmd_prefixes, help="prefix generators of a special group presentation")
    p.add_argument("file")
    p = add("ru-prefixes", _cmd_ru_prefixes, help="right-unit generators of a special inverse presentation")
    p.add_argument("file")

    p = add("transform", _cmd_transform, help="apply a presentation transformer")
    p.add_argument("which", choices=["mon2gp", "star", "freegen", "restrict", "mt", "mqw", "hnn"])
    p.add_argument("file")
    p.add_argument("--subset", default=None, help="comma-separated letters (star)")
    p.add_argument("--words", default=None, help="comma-separated words (mqw, hnn)")
    p.add_argument("--stable", default=None, help="stable letter name (mqw, hnn)")

    p = add("eq", _cmd_eq, help="decide equality in an annotated group structure")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--structure", required=True)
    p.add_argument("--alphabet", default=None)

    p = add("munn", _cmd_munn, help="Munn tree of a word")
    p.add_argument("word")
    p.add_argument("--alphabet", default=None)

    for name, fn in (("ball", _cmd_ball), ("units", _cmd_units)):
        p = add(name, fn, help=f"{name} of a finitely generated submonoid")
        p.add_argument("--structure", required=True)
        p.add_argument("--alphabet", default=None)
        p.add_argument("--gens", required=True, help="|-separated generator words")
        p.add_argument("--radius", type=int, default=greens.DEFAULT_RADIUS)

    p = add("schutz", _cmd_schutz, help="Schutzenberger subgroup automaton (free ambient)")
    p.add_argument("x")
    p.add_argument("--structure", required=True)
    p.add_argument("--alphabet", default=None)
    p.add_argument("--gens", required=True)
    p.add_argument("--unit-gens", required=True, dest="unit_gens")
    p.add_argument("--radius", type=int, default=greens.DEFAULT_RADIUS)

    p = add("prove", _cmd_prove, help="bounded word-problem semidecision")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--steps", type=int, default=100000)
    p.add_argument("--rc", action="store_true", help="use right-cancellative closure")
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    except (ParseError, WordError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Command line front end: ``simonk <subcommand> ...``.

The empty word is spelled ``-``. Exit codes: 0 for success, equivalence or a
passing suite; 1 for distinct words or a failing suite; 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import binary, counting, oracle, spectra, ternary
from .factorization import alpha_beta, arch_factorization, reverse_arch_factorization
from .words import EPSILON_TEXT, Alphabet, DomainError, ParseError, Word, parse_word


class UsageError(Exception):
    pass


def _text(arg: str) -> str:
    return "" if arg == EPSILON_TEXT else arg


def _alphabet_for(args, *texts: str) -> Alphabet:
    if args.alphabet:
        return Alphabet(args.alphabet)
    chars = sorted(set("".join(texts)))
    if not chars:
        raise UsageError("cannot infer an alphabet from empty words; pass --alphabet")
    return Alphabet("".join(chars))


def _words(args, *raw: str) -> list[Word]:
    texts = [_text(r) for r in raw]
    alphabet = _alphabet_for(args, *texts)
    return [parse_word(t, alphabet) for t in texts]


def _emit(args, data: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data))
    else:
        print("\n".join(lines))


def _fmt(x) -> str:
    return "inf" if x == spectra.INFINITE else str(x)


def cmd_factorize(args) -> int:
    (w,) = _words(args, args.word)
    f = alpha_beta(w)
    data = f.to_dict()
    rev = reverse_arch_factorization(w)
    rev_text = "".join(f"({r})" for r in rev.reverse_arches)
    parts = [f"α_0={f.alpha(0).render()}"]
    for i in range(1, f.m + 1):
        parts += [f"β_{i}={f.beta(i).render()}", f"α_{i}={f.alpha(i).render()}"]
    lines = [
        f"arches: {arch_factorization(w).render()}",
        f"reverse arches: {rev.reverse_rest.render()}·{rev_text}" if rev_text else
        f"reverse arches: {rev.reverse_rest.render()}",
        f"universality: {f.m}",
        "factors: " + " ".join(parts),
        f"modus: {f.modus.render()}",
        f"reverse modus: {f.reverse_modus.render()}",
        "cores: " + (" ".join(c.render() for c in f.cores) if f.m else ""),
    ]
    _emit(args, data, lines)
    return 0


def cmd_spectrum(args) -> int:
    (w,) = _words(args, args.word)
    s = spectra.spectrum_upto(w, args.k)
    if args.json:
        print(json.dumps({"word": w.render(), "k": args.k, "factors": s.render()}))
    else:
        sys.stdout.write(s.to_text())
    return 0


def _dispatch(u: Word, v: Word, method: str) -> str:
    if method != "auto":
        return method
    if u.sigma == 2:
        return "binary"
    if u.sigma == 3 and all(spectra.universality_index(x) == 1 for x in (u, v)):
        return "ternary"
    return "oracle"


def cmd_simk(args) -> int:
    u, v = _words(args, args.u, args.v)
    method = _dispatch(u, v, args.method)
    if method == "binary":
        same = binary.equiv_binary(u, v, args.k)
    elif method == "ternary":
        same = ternary.equiv_ternary(u, v, args.k)
    else:
        same = spectra.simk_oracle(u, v, args.k)
    verdict = "equivalent" if same else "distinct"
    _emit(args, {"u": u.render(), "v": v.render(), "k": args.k, "method": method,
                 "equivalent": same}, [verdict])
    return 0 if same else 1


def cmd_maxsimk(args) -> int:
    u, v = _words(args, args.u, args.v)
    method = "binary" if args.method == "auto" and u.sigma == 2 else args.method
    if method == "binary":
        value = binary.maxsimk_binary(u, v)
    elif method in ("oracle", "auto"):
        method = "oracle"
        value = spectra.maxsimk_oracle(u, v)
    else:
        raise UsageError(f"maxsimk has no {method!r} method")
    _emit(args, {"u": u.render(), "v": v.render(), "method": method, "maxsimk": _fmt(value)},
          [_fmt(value)])
    return 0


def cmd_singleton(args) -> int:
    (w,) = _words(args, args.word)
    alone = binary.is_singleton(w, args.k)
    data = {"word": w.render(), "k": args.k, "singleton": alone}
    lines = ["singleton" if alone else "not singleton"]
    if not alone:
        x = binary.singleton_witness(w, args.k)
        data["witness"] = x.render()
        lines.append(f"witness: {x.render()}")
    _emit(args, data, lines)
    return 0


def cmd_normal_form(args) -> int:
    (w,) = _words(args, args.word)
    nf = binary.normal_form_binary(w, args.k)
    _emit(args, {"word": w.render(), "k": args.k, "normal_form": nf.render()}, [nf.render()])
    return 0


def cmd_count_classes(args) -> int:
    k = args.k
    count = counting.perfect_universal_counts if args.perfect else counting.classes_with_m_arches_rec
    if args.arches is not None:
        value = count(k, args.arches)
        _emit(args, {"k": k, "m": args.arches, "perfect": args.perfect, "classes": value}, [str(value)])
        return 0
    row = {m: count(k, m) for m in range(k + 1)}
    lines = [f"{m}\t{c}" for m, c in row.items()]
    _emit(args, {"k": k, "perfect": args.perfect, "classes": {str(m): c for m, c in row.items()}}, lines)
    return 0


def cmd_index(args) -> int:
    value = counting.simon_index_binary(args.k)
    _emit(args, {"k": args.k, "index": value}, [str(value)])
    return 0


def cmd_ternary_case(args) -> int:
    (w,) = _words(args, args.word)
    case = ternary.classify_ternary_beta(w)
    data = {"word": w.render(), "row": case.row, "pattern": case.pattern,
            "roles": case.roles, "mirrored": case.mirrored}
    _emit(args, data, [f"{case.row}\t{case.pattern}", case.describe()])
    return 0


def cmd_enumerate_classes(args) -> int:
    alphabet = Alphabet(args.alphabet)
    part = oracle.partition_classes(alphabet, args.max_len, args.k)
    classes = []
    for members in part.classes.values():
        words = [w for w, _ in members]
        classes.append({
            "representative": words[0].render(),
            "size": len(words),
            "arches": min(members[0][1], args.k),
            "members": [w.render() for w in words],
        })
    # classes appear in order of their first member, which is shortlex minimal
    if args.json:
        print(json.dumps({"k": args.k, "alphabet": alphabet.symbols, "max_len": args.max_len,
                          "count": len(classes), "classes": classes}))
        return 0
    print(f"{len(classes)} classes")
    for c in classes:
        print(f"{c['representative']}\tsize={c['size']}\tarches={c['arches']}")
    return 0


SUITES = {
    "table1": lambda a: oracle.verify_counting(k_max=a.max_k or 4),
    "table2": lambda a: oracle.verify_perfect_universal(k_max=a.max_k or 5),
    "binary-char": lambda a: oracle.verify_binary_characterization(a.max_len or 10, a.max_k or 4),
    "ternary-char": lambda a: oracle.verify_ternary_characterization(
        a.max_len or 9, range(2, (a.max_k or 3) + 1)),
    "singleton": lambda a: oracle.verify_singleton(a.max_len or 10, a.max_k or 4),
    "maxsimk": lambda a: oracle.verify_maxsimk(a.max_len or 9),
    "ternary-reduction": lambda a: oracle.verify_reduction_to_one_arch(a.max_len or 10),
    "modus-set": lambda a: oracle.modus_set_blocks_report(a.max_len or 9, a.max_k or 3),
}


def cmd_verify(args) -> int:
    report = SUITES[args.suite](args)
    if args.json:
        print(report.to_json())
    else:
        print(report.summary())
        for ex in report.counterexamples:
            print(f"  {ex}")
    return 0 if report.passed else 1


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simonk", description="Simon's congruence toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, words=(), k=False, alphabet=True, json_flag=True):
        sp = sub.add_parser(name, help=help_text)
        for w in words:
            sp.add_argument(w, help="word, '-' for the empty word")
        if k:
            sp.add_argument("-k", type=_nonneg, required=True)
        if alphabet:
            sp.add_argument("--alphabet", help="ordered letters, default: letters of the input")
        if json_flag:
            sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    add("factorize", cmd_factorize, "arch and alpha-beta factorization", words=("word",))
    add("spectrum", cmd_spectrum, "scattered factors up to length k", words=("word",), k=True)
    sp = add("simk", cmd_simk, "decide u ~_k v", words=("u", "v"), k=True)
    sp.add_argument("--method", choices=("auto", "oracle", "binary", "ternary"), default="auto")
    sp = add("maxsimk", cmd_maxsimk, "largest k with u ~_k v", words=("u", "v"))
    sp.add_argument("--method", choices=("auto", "oracle", "binary"), default="auto")
    add("singleton", cmd_singleton, "is the binary class of w a singleton", words=("word",), k=True)
    add("normal-form", cmd_normal_form, "canonical binary representative", words=("word",), k=True)
    sp = add("count-classes", cmd_count_classes, "binary class counts", k=True, alphabet=False)
    sp.add_argument("--arches", type=_nonneg, help="only the count for this number of arches")
    sp.add_argument("--perfect", action="store_true", help="count perfect universal words")
    add("index", cmd_index, "number of binary classes", k=True, alphabet=False)
    add("ternary-case", cmd_ternary_case, "beta table row of a 1-universal ternary word",
        words=("word",))
    sp = add("enumerate-classes", cmd_enumerate_classes, "brute-force partition", k=True,
             alphabet=False)
    sp.add_argument("--max-len", type=_nonneg, required=True)
    sp.add_argument("--alphabet", required=True)
    sp = add("verify", cmd_verify, "run a verification suite", alphabet=False)
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--max-len", type=_nonneg)
    sp.add_argument("--max-k", type=_nonneg)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, DomainError) as e:
        print(f"simonk {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""
Subcommand implementations. Each returns the process exit code:
0 the property holds, 1 it is refuted, 2 error, 3 search budget exceeded.
"""

import argparse
import json
import re
from enum import IntEnum
from pathlib import Path

import pandas as pd
import structlog
from pydantic import BaseModel

from simplicial_verify.cm import CMConfig, cm_report, is_cohen_macaulay
from simplicial_verify.complex import (
    Face,
    RelativeComplex,
    SimplicialComplex,
    VertexMap,
    f_vector,
    h_vector,
    is_balanced,
    minimal_faces,
)
from simplicial_verify.corpus import CorpusVerifier, default_library
from simplicial_verify.decompose import (
    SearchConfig,
    SearchReport,
    SearchResult,
    find_partitioning,
    find_shelling,
    verify_constructibility,
    verify_partitioning,
    verify_shelling,
)
from simplicial_verify.errors import (
    DocumentParseError,
    MalformedCertificateError,
    SearchBudgetExceededError,
)
from simplicial_verify.glue import GlueSpec, check_glue_hypotheses, glue
from simplicial_verify.homology import reduced_homology
from simplicial_verify.settings import settings
from simplicial_verify.utils import load_txt

from .documents import (
    CORPUS_PREFIX,
    CMVerdictDocument,
    ColoringDocument,
    ComplexDocument,
    ConstructibilityDocument,
    HomologyDocument,
    LoadedComplex,
    PartitioningDocument,
    RejectedOrderDocument,
    SearchReportDocument,
    ShellingDocument,
    cm_document,
    coloring_document,
    constructibility_from_document,
    corpus_complex,
    face_names,
    homology_document,
    load_certificate,
    load_complex,
    partitioning_document,
    partitioning_from_document,
    save_complex,
    save_document,
    search_report_document,
    shelling_document,
    shelling_from_document,
)

logger = structlog.get_logger(__name__)


class ExitCode(IntEnum):
    HOLDS = 0
    REFUTED = 1
    ERROR = 2
    BUDGET = 3


def _verdict(holds: bool) -> ExitCode:  # noqa: FBT001
    return ExitCode.HOLDS if holds else ExitCode.REFUTED


def _stem(source: str) -> str:
    name = source.removeprefix(CORPUS_PREFIX)
    return re.sub(r"[^A-Za-z0-9_-]+", "_", Path(name).stem) or "complex"


def _output(args: argparse.Namespace, source: str, suffix: str) -> Path:
    if args.out:
        return Path(args.out)
    return settings.output_path / f"{_stem(source)}.{suffix}.json"


def _search_config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(budget_seconds=args.budget, workers=args.threads)


def _write(document: BaseModel, path: Path) -> None:
    save_document(document, path)
    print(f"certificate: {path}")


def _print_report(report: SearchReport) -> None:
    print(
        f"{report.result.value}: {report.nodes_explored} nodes, "
        f"{report.options_generated} options, {report.wall_time:.3f} s"
    )


def cmd_info(args: argparse.Namespace) -> int:
    loaded = load_complex(args.complex)
    complex_ = loaded.complex
    print(f"source: {loaded.source}")
    print(f"dimension: {complex_.dimension}")
    print(f"pure: {'yes' if complex_.is_pure else 'no'}")
    print(f"vertices: {complex_.n_vertices}")
    print(f"facets: {len(complex_.maximal_faces)}")
    print(f"f = {f_vector(complex_)}; h = {h_vector(complex_)}")
    if isinstance(complex_, RelativeComplex):
        minimal = " ".join(face_names(f, loaded.names) for f in minimal_faces(complex_))
        print(f"relative; minimal faces: {minimal}")
    return ExitCode.HOLDS


def _order(text: str, names: VertexMap) -> list[Face]:
    if text.startswith("@"):
        text = load_txt(Path(text[1:]))
    faces: list[Face] = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        labels = token.split("-") if "-" in token else list(token)
        faces.append(names.face(labels))
    return faces


def _check_cm(args: argparse.Namespace, loaded: LoadedComplex) -> int:
    config = CMConfig(stop_at_first=not args.table, workers=args.threads)
    if args.table:
        frame = cm_report(loaded.complex, config).to_frame()
        print(frame.to_string(index=False))
    verdict = is_cohen_macaulay(loaded.complex, config)
    if verdict.holds:
        print(f"Cohen-Macaulay ({verdict.faces_checked} links checked)")
    else:
        assert verdict.witness is not None
        face = face_names(verdict.witness.face, loaded.names)
        print(f"not Cohen-Macaulay: face {face}: H{verdict.witness.degree}(link) = {verdict.witness.group}")
    _write(cm_document(verdict, loaded.names), _output(args, loaded.source, "cm"))
    return _verdict(verdict.holds)


def _check_partition(args: argparse.Namespace, loaded: LoadedComplex) -> int:
    outcome = find_partitioning(loaded.complex, _search_config(args))
    _print_report(outcome.report)
    path = _output(args, loaded.source, "partition")
    if outcome.certificate is None:
        _write(search_report_document("partition", outcome.report), path)
        return ExitCode.REFUTED
    for interval in outcome.certificate.intervals:
        print(f"[{face_names(interval.bottom, loaded.names)}, {face_names(interval.top, loaded.names)}]")
    _write(partitioning_document(outcome.certificate, loaded.names), path)
    return ExitCode.HOLDS


def _check_shell(args: argparse.Namespace, loaded: LoadedComplex) -> int:
    complex_ = loaded.complex
    if not isinstance(complex_, SimplicialComplex):
        msg = "Shellability is checked for absolute complexes only"
        raise MalformedCertificateError(msg)
    path = _output(args, loaded.source, "shell")
    if args.order:
        order = _order(args.order, loaded.names)
        result = verify_shelling(complex_, order)
        if result.certificate is None:
            assert result.violation is not None
            print(f"not a shelling: {result.violation}")
            print("(this order only; shellability itself is not decided)")
            rejected = RejectedOrderDocument(
                order=[loaded.names.names(f) for f in order], violation=result.violation
            )
            _write(rejected, path)
            return ExitCode.REFUTED
        shelling = result.certificate
    else:
        outcome = find_shelling(complex_, _search_config(args))
        _print_report(outcome.report)
        if outcome.certificate is None:
            _write(search_report_document("shell", outcome.report), path)
            return ExitCode.REFUTED
        shelling = outcome.certificate
    for facet, restriction in zip(shelling.order, shelling.restrictions, strict=True):
        print(f"{face_names(facet, loaded.names)}  R = {face_names(restriction, loaded.names)}")
    _write(shelling_document(shelling, loaded.names), path)
    return ExitCode.HOLDS


def _check_balanced(args: argparse.Namespace, loaded: LoadedComplex) -> int:
    complex_ = loaded.complex
    if not isinstance(complex_, SimplicialComplex):
        msg = "Balancedness is checked for absolute complexes only"
        raise MalformedCertificateError(msg)
    check = is_balanced(complex_)
    print("balanced" if check.holds else f"not balanced: no proper {complex_.dimension + 1}-coloring")
    _write(coloring_document(check, loaded.names), _output(args, loaded.source, "balanced"))
    return _verdict(check.holds)


def _check_homology(args: argparse.Namespace, loaded: LoadedComplex) -> int:
    profile = reduced_homology(loaded.complex)
    for group in profile.groups:
        print(f"H{group.dimension} = {group}")
    _write(homology_document(profile), _output(args, loaded.source, "homology"))
    return ExitCode.HOLDS


def cmd_check(args: argparse.Namespace) -> int:
    loaded = load_complex(args.complex)
    handlers = {
        "cm": _check_cm,
        "partition": _check_partition,
        "shell": _check_shell,
        "balanced": _check_balanced,
        "homology": _check_homology,
    }
    try:
        return handlers[args.which](args, loaded)
    except SearchBudgetExceededError as e:
        print(f"UNKNOWN: {e}")
        if isinstance(e.report, SearchReport):
            _write(search_report_document(args.which, e.report), _output(args, loaded.source, args.which))
        return ExitCode.BUDGET


def _verify_coloring(document: ColoringDocument, loaded: LoadedComplex) -> tuple[bool, str]:
    complex_ = loaded.complex
    if not isinstance(complex_, SimplicialComplex):
        return False, "colorings are defined for absolute complexes only"
    if not document.holds:
        check = is_balanced(complex_)
        return not check.holds, "no coloring exists" if not check.holds else "a coloring exists"
    if document.coloring is None:
        return False, "coloring missing"
    colors = {loaded.names.index(label): c for label, c in document.coloring.items()}
    n_colors = complex_.dimension + 1
    for v in sorted(complex_.vertices):
        if not 0 <= colors.get(v, -1) < n_colors:
            return False, f"vertex {loaded.names.label(v)} has no color in 0..{n_colors - 1}"
    for facet in complex_.maximal_faces:
        if len({colors[v] for v in facet}) != len(facet):
            return False, f"facet {face_names(facet, loaded.names)} repeats a color"
    return True, "coloring is proper"


def _verify_search_report(
    document: SearchReportDocument, loaded: LoadedComplex, args: argparse.Namespace
) -> tuple[bool, str]:
    if document.result != SearchResult.UNSAT.value:
        return False, f"a {document.result} report certifies nothing"
    config = _search_config(args)
    if document.check == "partition":
        outcome = find_partitioning(loaded.complex, config)
    elif document.check == "shell" and isinstance(loaded.complex, SimplicialComplex):
        outcome = find_shelling(loaded.complex, config)
    else:
        return False, f"cannot re-run a {document.check!r} search"
    _print_report(outcome.report)
    return not outcome.found, "UNSAT reproduced" if not outcome.found else "search found a certificate"


def cmd_verify(args: argparse.Namespace) -> int:
    loaded = load_complex(args.complex)
    document = load_certificate(Path(args.certificate))
    complex_ = loaded.complex
    try:
        match document:
            case PartitioningDocument():
                result = verify_partitioning(complex_, partitioning_from_document(document, loaded.names))
                holds, detail = result.holds, result.violation or "valid partitioning"
            case ShellingDocument():
                if not isinstance(complex_, SimplicialComplex):
                    msg = "Shellings are defined for absolute complexes only"
                    raise MalformedCertificateError(msg)
                claimed = shelling_from_document(document, loaded.names)
                result = verify_shelling(complex_, claimed.order)
                holds = result.certificate == claimed
                detail = result.violation or ("valid shelling" if holds else "restriction faces differ")
            case RejectedOrderDocument():
                if not isinstance(complex_, SimplicialComplex):
                    msg = "Shellings are defined for absolute complexes only"
                    raise MalformedCertificateError(msg)
                result = verify_shelling(complex_, [loaded.names.face(f) for f in document.order])
                holds = not result.holds
                detail = f"order rejected: {result.violation}" if holds else "order is a valid shelling"
            case ConstructibilityDocument():
                if not isinstance(complex_, SimplicialComplex):
                    msg = "Constructibility is defined for absolute complexes only"
                    raise MalformedCertificateError(msg)
                result = verify_constructibility(complex_, constructibility_from_document(document, loaded.names))
                holds, detail = result.holds, result.violation or "valid constructibility tree"
            case CMVerdictDocument():
                verdict = is_cohen_macaulay(complex_, CMConfig(workers=args.threads))
                holds = verdict.holds == document.holds
                if holds and verdict.witness is not None and document.witness is not None:
                    holds = loaded.names.names(verdict.witness.face) == document.witness.face
                detail = "verdict reproduced" if holds else "verdict differs"
            case ColoringDocument():
                holds, detail = _verify_coloring(document, loaded)
            case HomologyDocument():
                profile = homology_document(reduced_homology(complex_))
                holds = profile.groups == document.groups
                detail = "homology reproduced" if holds else "homology differs"
            case SearchReportDocument():
                holds, detail = _verify_search_report(document, loaded, args)
            case _:
                msg = f"Unsupported certificate {type(document).__name__}"
                raise DocumentParseError(msg)
    except SearchBudgetExceededError as e:
        print(f"UNKNOWN: {e}")
        return ExitCode.BUDGET
    print(f"{'OK' if holds else 'REJECTED'}: {detail}")
    return _verdict(holds)


def cmd_glue(args: argparse.Namespace) -> int:
    x = load_complex(args.x)
    a = load_complex(args.a)
    if not isinstance(x.complex, SimplicialComplex) or not isinstance(a.complex, SimplicialComplex):
        msg = "Gluing needs two absolute complexes"
        raise DocumentParseError(msg)
    # read A in X's vertex names
    a_complex = SimplicialComplex.from_facets(
        x.names.face(a.names.names(f)) for f in a.complex.maximal_faces
    )
    spec = GlueSpec(x.complex, a_complex, args.copies)
    result = glue(spec, x.names)

    hypotheses = check_glue_hypotheses(spec)
    frame = pd.DataFrame(hypotheses.rows(), columns=["hypothesis", "value", "satisfied"])
    print(frame.to_string(index=False))
    if hypotheses.induced is not None and not hypotheses.induced.holds:
        witness = hypotheses.induced.witness
        assert witness is not None
        print(f"warning: A is not induced in X (minimal face {face_names(witness, x.names)} of X∖A)")
        logger.warning("Glued along a non-induced subcomplex.", witness=str(witness))
    print(f"theorem applies: {'yes' if hypotheses.theorem_applies else 'no'}")

    out = Path(args.out) if args.out else settings.output_path / (
        f"{_stem(args.x)}-{_stem(args.a)}-{args.copies}.json"
    )
    glued = LoadedComplex(
        result.complex,
        result.vertex_map,
        str(out),
        result.provenance,
        f"{args.copies} copies of {args.x} glued along {args.a}",
    )
    save_complex(glued, out)
    print(f"f = {f_vector(result.complex)}; h = {h_vector(result.complex)}")
    print(f"written: {out}")
    return ExitCode.HOLDS


def cmd_reproduce(args: argparse.Namespace) -> int:
    library = default_library()
    if args.only is None:
        names = library.list_entries()
    else:
        names = [n.strip() for n in args.only.split(",") if n.strip()]
    verifier = CorpusVerifier(
        library, skip_slow=args.skip_slow, budget=args.budget, workers=args.threads
    )
    report = verifier.verify(names)
    frame = report.to_frame()
    if frame.empty:
        print("no checks selected")
    else:
        with pd.option_context("display.max_colwidth", 60, "display.width", 200):
            print(frame.to_string(index=False))
    failures = report.failures()
    print(f"{len(report.rows)} checks, {len(failures)} failed")
    return _verdict(not failures)


def cmd_export(args: argparse.Namespace) -> int:
    loaded = corpus_complex(args.name.removeprefix(CORPUS_PREFIX))
    if args.out:
        save_complex(loaded, Path(args.out))
        print(f"written: {args.out}")
        return ExitCode.HOLDS
    document = ComplexDocument.from_complex(
        loaded.complex,
        loaded.names,
        description=loaded.description,
        provenance=loaded.provenance,
    )
    print(json.dumps(document.model_dump(exclude_none=True), indent=2, ensure_ascii=False))
    return ExitCode.HOLDS


COMMANDS = {
    "info": cmd_info,
    "check": cmd_check,
    "verify": cmd_verify,
    "glue": cmd_glue,
    "reproduce": cmd_reproduce,
    "export": cmd_export,
}

import pytest

from src.corpus import Corpus, GraphKind, GraphSample, builtin_samples
from src.enumeration import all_maximal_omnitig_handles, materialize_all
from src.errors import GraphContractError, InputFormatError
from src.verify.suite import check_sample, run_verification_suite


@pytest.mark.parametrize("sample", builtin_samples(), ids=lambda s: s.id)
def test_builtin_expectations(sample) -> None:
    rep = all_maximal_omnitig_handles(sample.graph())
    assert len(rep) == sample.expected_count
    assert rep.closed_path == sample.closed_path
    if "omnitigs" in sample.metadata:
        expected = {tuple(w) for w in sample.metadata["omnitigs"]}
        assert {w.arcs for w in materialize_all(rep)} == expected


def test_lookup_and_filter() -> None:
    corpus = Corpus()
    assert corpus.count() == len(builtin_samples())
    assert corpus.get_by_id("split_join").kind is GraphKind.CHORD
    assert corpus.get_by_id("missing") is None
    assert [s.id for s in corpus.samples(GraphKind.CYCLE)] == ["cycle2", "cycle5"]
    assert corpus.count(GraphKind.BOUQUET) == 3


def _store(path, *samples: GraphSample) -> None:
    path.mkdir(parents=True, exist_ok=True)
    text = "".join(sample.model_dump_json() + "\n" for sample in samples)
    (path / "corpus.jsonl").write_text(text, encoding="utf-8")


def test_stored_samples_are_loaded(tmp_path) -> None:
    _store(
        tmp_path,
        GraphSample(
            id="bouquet5",
            kind=GraphKind.BOUQUET,
            title="One node, five self-loops",
            edge_list="1 5\n0 0\n0 0\n0 0\n0 0\n0 0\n",
            expected_count=5,
        ),
        GraphSample(id="cycle2", kind=GraphKind.CHAIN, title="Replaced", edge_list="2 2\n0 1\n1 0\n"),
    )
    corpus = Corpus(tmp_path)
    assert corpus.count() == len(builtin_samples()) + 1
    assert corpus.get_by_id("cycle2").title == "Replaced"
    assert [s.id for s in corpus.samples(GraphKind.CYCLE)] == ["cycle5"]
    sample = corpus.get_by_id("bouquet5")
    assert sample is not None
    assert len(all_maximal_omnitig_handles(sample.graph())) == 5


def test_malformed_stored_sample(tmp_path) -> None:
    (tmp_path / "corpus.jsonl").write_text('\n{"id": "x"}\n', encoding="utf-8")
    with pytest.raises(InputFormatError, match="line 2"):
        Corpus(tmp_path)


def test_corpus_checks_pass_on_builtin_graphs() -> None:
    results = [check_sample(sample) for sample in builtin_samples()]
    assert all(r.passed for r in results), [r.problems for r in results if not r.passed]


def test_corpus_check_reports_wrong_records() -> None:
    wrong = GraphSample(
        id="bouquet2_wrong",
        kind=GraphKind.BOUQUET,
        title="Two self-loops with a bad record",
        edge_list="1 2\n0 0\n0 0\n",
        expected_count=3,
        metadata={"omnitigs": [[0], [1]]},
    )
    problems = check_sample(wrong).problems
    assert problems[0] == "2 omnitigs, expected 3"
    assert problems[1].startswith("walks [(0, 1), (1, 0)] differ")
    assert check_sample(GraphSample(id="bare", kind=GraphKind.CHAIN, title="nothing")).problems[0].startswith(
        "pipeline failed"
    )


def test_suite_fails_on_a_bad_corpus_graph(tmp_path) -> None:
    _store(
        tmp_path,
        GraphSample(
            id="split_join",
            kind=GraphKind.CHORD,
            title="Bad count",
            edge_list="3 4\n0 1\n0 2\n2 1\n1 0\n",
            expected_count=1,
        ),
    )
    summary = run_verification_suite([], corpus=Corpus(tmp_path))
    assert summary.corpus_samples == len(builtin_samples())
    assert summary.failed_samples == ["split_join"]
    assert not summary.ok


def test_sample_without_graph_source() -> None:
    with pytest.raises(GraphContractError):
        GraphSample(id="empty", kind=GraphKind.CHAIN, title="nothing").graph()

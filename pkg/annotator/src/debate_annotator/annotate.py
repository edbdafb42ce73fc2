"""Corpus reading, per-sentence annotators, and the sidecar writer."""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sklearn.decomposition import LatentDirichletAllocation

from . import lexicons as lx

log = logging.getLogger("debate_annotator")

_TOKEN_RE = re.compile(r"[^\W_]+")

SOURCES = ("CT", "ABC", "CNN", "WP", "NPR", "PF", "TG", "NYT", "FC")

POS_TAGS = ("NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM",
            "CONJ", "PRT", "PUNCT", "X")

RELATIONS = ("elaboration", "contrast", "cause", "condition", "temporal",
             "comparison", "attribution", "background", "none")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


@dataclass
class AnnotatorConfig:
    corpus_path: str
    embeddings_path: str
    output_path: str
    topics: int = 30
    seed: int = 13
    discourse_mode: str = "heuristic"
    min_df: int = 2

    def __post_init__(self):
        if self.topics < 2:
            raise ValueError("topic count must be >= 2")
        if self.discourse_mode != "heuristic":
            raise ValueError(
                f"unsupported discourse mode {self.discourse_mode!r}; only the "
                "connective-based heuristic is bundled"
            )


# ---------------------------------------------------------------------------
# corpus input (validated against the documented JSON-Lines schema)


def read_corpus(path) -> list[dict]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"corpus file not found: {path}")
    sentences: list[dict] = []
    expected_index: dict[str, int] = {}
    finished: set[str] = set()
    current: str | None = None
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{line_no}: invalid JSON: {exc.msg}") from exc
            for key in ("debate_id", "index", "speaker", "text", "labels"):
                if key not in rec:
                    raise ValueError(f"{path}:{line_no}: missing field {key!r}")
            debate = rec["debate_id"]
            if debate != current:
                if debate in finished:
                    raise ValueError(f"{path}:{line_no}: debate {debate!r} not contiguous")
                if current is not None:
                    finished.add(current)
                current = debate
            want = expected_index.get(debate, 0)
            if rec["index"] != want:
                raise ValueError(
                    f"{path}:{line_no}: debate {debate!r} expected index {want}, "
                    f"got {rec['index']}"
                )
            expected_index[debate] = want + 1
            labels = rec["labels"]
            if set(labels) != set(SOURCES) or any(v not in (0, 1) for v in labels.values()):
                raise ValueError(f"{path}:{line_no}: malformed labels object")
            if not str(rec["text"]).strip():
                raise ValueError(f"{path}:{line_no}: empty text")
            sentences.append(rec)
    if not sentences:
        raise ValueError(f"{path}: no records")
    return sentences


# ---------------------------------------------------------------------------
# embeddings


def load_embedding_table(path) -> dict[str, np.ndarray]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"embedding table not found: {path}")
    table: dict[str, np.ndarray] = {}
    dim: int | None = None
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                continue
            word, values = parts[0], parts[1:]
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise ValueError(f"{path}:{line_no}: expected {dim} values")
            table[word] = np.asarray(values, dtype=np.float64)
    if not table:
        raise ValueError(f"{path}: empty embedding table")
    return table


def mean_embedding(tokens, table, dim) -> tuple[np.ndarray, bool]:
    """Mean of in-table token vectors; zero vector when all are unknown."""
    vecs = [table[t] for t in tokens if t in table]
    if not vecs:
        return np.zeros(dim), False
    return np.mean(vecs, axis=0), True


# ---------------------------------------------------------------------------
# POS tagging (rule-based, coarse 12-tag set)

_DET = set("the a an this that these those".split())
_PRON = set("i we you they he she it me us them our your my his her their".split())
_ADP = set("in on at of to for with from by about under over into through "
           "against during between".split())
_CONJ = set("and or but because so nor yet while although".split())
_PRT = {"not"}
_ADV_WORDS = set("very never always often again too also just now here there "
                 "really maybe perhaps probably".split())
_VERB_WORDS = set("is are was were be been am do does did have has had will "
                  "would can could should said says say made make get got "
                  "go went think know want need".split())
_ADJ_SUFFIX = ("ous", "ful", "ive", "less", "able", "ible", "ish")
_VERB_SUFFIX = ("ed", "ing")

_PUNCT_RE = re.compile(r"[.,!?;:]")


def pos_counts(tokens: list[str], text: str) -> dict[str, int]:
    counts: dict[str, int] = {}

    def bump(tag):
        counts[tag] = counts.get(tag, 0) + 1

    for t in tokens:
        if any(ch.isdigit() for ch in t):
            bump("NUM")
        elif t in _DET:
            bump("DET")
        elif t in _PRON:
            bump("PRON")
        elif t in _ADP:
            bump("ADP")
        elif t in _CONJ:
            bump("CONJ")
        elif t in _PRT:
            bump("PRT")
        elif t in _ADV_WORDS or t.endswith("ly"):
            bump("ADV")
        elif t in _VERB_WORDS or t.endswith(_VERB_SUFFIX):
            bump("VERB")
        elif t.endswith(_ADJ_SUFFIX) or t in lx.POSITIVE or t in lx.NEGATIVE:
            bump("ADJ")
        else:
            bump("NOUN")
    punct = len(_PUNCT_RE.findall(text))
    if punct:
        counts["PUNCT"] = punct
    return counts


# ---------------------------------------------------------------------------
# named entities (gazetteer-based)


def ner_record(tokens: list[str]) -> dict:
    flags = {
        "PER": int(any(t in lx.PERSON_TITLES or t in lx.SURNAMES for t in tokens)),
        "ORG": int(any(t in lx.INSTITUTIONS for t in tokens)),
        "LOC": int(any(t in lx.PLACES for t in tokens)),
        "MISC": int(any(t in lx.GROUPS for t in tokens)),
    }
    gaz = lx.PERSON_TITLES | lx.SURNAMES | lx.INSTITUTIONS | lx.PLACES | lx.GROUPS
    return {**flags, "count": sum(1 for t in tokens if t in gaz)}


# ---------------------------------------------------------------------------
# sentiment


def sentiment_score(tokens: list[str]) -> float:
    pos = sum(1 for t in tokens if t in lx.POSITIVE)
    neg = sum(1 for t in tokens if t in lx.NEGATIVE)
    if pos + neg == 0:
        return 0.0
    return round(float(np.clip((pos - neg) / (pos + neg), -1.0, 1.0)), 6)


# ---------------------------------------------------------------------------
# discourse relations (connective heuristic)

_CAUSE = {"because", "since", "therefore", "thus"}
_CONTRAST = {"but", "however", "although", "though", "yet", "instead"}
_CONDITION = {"if", "unless"}
_TEMPORAL = {"when", "after", "before", "until", "then", "meanwhile"}
_COMPARISON = {"than", "like", "compared"}
_ATTRIBUTION = {"said", "says", "claimed", "claims", "according", "reported"}
_STOP = (_DET | _PRON | _ADP | _CONJ | {"is", "are", "was", "were", "be",
         "have", "has", "had", "will", "would", "we", "they"})


def relation_between(prev_rec: dict, prev_tokens: list[str],
                     cur_rec: dict, cur_tokens: list[str]) -> str:
    """Relation linking a sentence to its predecessor, from surface cues."""
    lead = set(cur_tokens[:3])
    if lead & _CAUSE:
        return "cause"
    if lead & _CONTRAST:
        return "contrast"
    if lead & _CONDITION:
        return "condition"
    if lead & _TEMPORAL:
        return "temporal"
    if set(cur_tokens) & _ATTRIBUTION:
        return "attribution"
    if set(cur_tokens) & _COMPARISON:
        return "comparison"
    if prev_rec["speaker"] != cur_rec["speaker"]:
        # speaker change: a response elaborates on a question, else no link
        return "background" if prev_rec["text"].rstrip().endswith("?") else "none"
    content_prev = set(prev_tokens) - _STOP
    content_cur = set(cur_tokens) - _STOP
    if content_prev & content_cur:
        return "elaboration"
    return "background"


# ---------------------------------------------------------------------------
# topics


def fit_topics(token_lists: list[list[str]], k: int, seed: int,
               min_df: int) -> np.ndarray:
    """LDA document-topic proportions, rows summing to 1."""
    df: dict[str, int] = {}
    for tokens in token_lists:
        for t in set(tokens):
            df[t] = df.get(t, 0) + 1
    vocab = sorted(t for t, n in df.items() if n >= min_df)
    if not vocab:
        raise ValueError("corpus too small to fit topics (empty LDA vocabulary)")
    col = {t: i for i, t in enumerate(vocab)}
    counts = np.zeros((len(token_lists), len(vocab)), dtype=np.float64)
    for i, tokens in enumerate(token_lists):
        for t in tokens:
            j = col.get(t)
            if j is not None:
                counts[i, j] += 1.0

    lda = LatentDirichletAllocation(n_components=k, random_state=seed,
                                    learning_method="batch", max_iter=25)
    doc_topic = lda.fit_transform(counts)
    # rows of fit_transform are already normalized; enforce it exactly
    doc_topic = doc_topic / doc_topic.sum(axis=1, keepdims=True)
    return doc_topic


def _round_simplex(vec: np.ndarray, decimals: int = 8) -> list[float]:
    """Round while keeping the sum within 1e-6 of 1."""
    rounded = [round(float(v), decimals) for v in vec]
    drift = 1.0 - sum(rounded)
    if abs(drift) > 5e-7:
        j = int(np.argmax(vec))
        rounded[j] = round(rounded[j] + drift, decimals + 2)
    return rounded


# ---------------------------------------------------------------------------
# driver


def annotate_corpus(config: AnnotatorConfig) -> Path:
    """Write one sidecar record per corpus sentence; returns the output path."""
    sentences = read_corpus(config.corpus_path)
    table = load_embedding_table(config.embeddings_path)
    dim = len(next(iter(table.values())))

    token_lists = [tokenize(rec["text"]) for rec in sentences]
    doc_topic = fit_topics(token_lists, config.topics, config.seed, config.min_df)

    no_embedding = 0
    failed_tagging = 0
    records: list[str] = []
    for i, (rec, tokens) in enumerate(zip(sentences, token_lists)):
        emb, known = mean_embedding(tokens, table, dim)
        if not known:
            no_embedding += 1
            log.warning("no embedding tokens for (%s, %s); zero vector emitted",
                        rec["debate_id"], rec["index"])
        try:
            pos = pos_counts(tokens, rec["text"])
        except Exception:  # never drop a sentence over a tagging failure
            failed_tagging += 1
            log.warning("tagging failed for (%s, %s); empty pos_counts emitted",
                        rec["debate_id"], rec["index"])
            pos = {}

        prev_rel = "none"
        if i > 0 and sentences[i - 1]["debate_id"] == rec["debate_id"]:
            prev_rel = relation_between(sentences[i - 1], token_lists[i - 1], rec, tokens)
        next_rel = "none"
        if i + 1 < len(sentences) and sentences[i + 1]["debate_id"] == rec["debate_id"]:
            next_rel = relation_between(rec, tokens, sentences[i + 1], token_lists[i + 1])

        records.append(json.dumps({
            "debate_id": rec["debate_id"],
            "index": rec["index"],
            "pos_counts": pos,
            "ner": ner_record(tokens),
            "sentiment": sentiment_score(tokens),
            "topics": _round_simplex(doc_topic[i]),
            "embedding": [round(float(v), 5) for v in emb],
            "discourse_prev": prev_rel,
            "discourse_next": next_rel,
        }))

    from . import __version__

    out = Path(config.output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    header = (f"# sidecar annotations | debate-annotator {__version__} "
              f"topics={config.topics} seed={config.seed} "
              f"discourse={config.discourse_mode}")
    out.write_text(header + "\n" + "\n".join(records) + "\n", encoding="utf-8")
    if no_embedding:
        log.warning("%d sentences had no in-table tokens", no_embedding)
    if failed_tagging:
        log.warning("%d sentences failed tagging", failed_tagging)
    return out

"""Parse, clean, label, and split DNA sequence datasets.

Input boundaries are local files only: FASTA for raw sequences and a
``id,sequence,label`` CSV for labeled datasets. Sequences are cleaned to
the uppercase alphabet {A,C,G,T,N}; unknown characters become N rather
than erroring because public gene records routinely carry ambiguity
codes.
"""

from __future__ import annotations

import csv
import math
import re
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import (
    ConfigError,
    DuplicateIdError,
    EmptySequenceError,
    FormatError,
    SchemaError,
    StratificationError,
)
from .seeds import rng_for

LABELED_CSV_HEADER = ["id", "sequence", "label"]

_DELETE_WS_DIGITS = str.maketrans("", "", string.whitespace + string.digits)
_NON_ACGT = re.compile(r"[^ACGT]")


@dataclass(frozen=True)
class SequenceRecord:
    """One identified DNA sequence; ``sequence`` is cleaned and uppercase."""

    id: str
    description: str
    sequence: str


@dataclass
class LabeledDataset:
    """Parallel lists of records and {0,1} labels (1 = related)."""

    records: list[SequenceRecord]
    labels: list[int]

    def __post_init__(self) -> None:
        if len(self.records) != len(self.labels):
            raise FormatError(
                f"{len(self.records)} records but {len(self.labels)} labels"
            )

    def __len__(self) -> int:
        return len(self.records)

    def class_counts(self) -> tuple[int, int]:
        pos = sum(self.labels)
        return len(self.labels) - pos, pos

    def subset(self, indices: Iterable[int]) -> "LabeledDataset":
        idx = list(indices)
        return LabeledDataset(
            [self.records[i] for i in idx], [self.labels[i] for i in idx]
        )


@dataclass(frozen=True)
class SplitSpec:
    """Train/test split parameters; permutations depend only on ``seed``."""

    train_fraction: float
    stratified: bool = True
    seed: int = 0
    # Keep all transcripts sharing an id prefix (text before the first '-')
    # in the same fold. Grouped splits ignore the stratified flag.
    group_by_prefix: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction < 1.0:
            raise ConfigError(
                f"train_fraction must be in (0,1), got {self.train_fraction}"
            )


def clean_sequence(raw: str) -> str:
    """Uppercase, strip whitespace/digits, map U->T and anything else to N."""
    s = raw.upper().translate(_DELETE_WS_DIGITS).replace("U", "T")
    s = _NON_ACGT.sub(lambda m: "N" if m.group() != "N" else "N", s)
    if not s:
        raise EmptySequenceError("sequence is empty after cleaning")
    return s


def parse_fasta(source: str | bytes | IO[str]) -> list[SequenceRecord]:
    """Parse FASTA text into cleaned records.

    Headers are ``>`` lines; the id is the first whitespace-delimited token,
    the description the remainder. Multi-line bodies are concatenated and
    cleaned. LF and CRLF are both accepted.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()

    records: list[SequenceRecord] = []
    seen: set[str] = set()
    rec_id: str | None = None
    description = ""
    parts: list[str] = []

    def flush() -> None:
        if rec_id is None:
            return
        body = "".join(parts)
        if not body.strip():
            raise FormatError(f"empty sequence for record '{rec_id}'")
        try:
            cleaned = clean_sequence(body)
        except EmptySequenceError:
            raise FormatError(f"empty sequence for record '{rec_id}'") from None
        records.append(SequenceRecord(rec_id, description, cleaned))

    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith(">"):
            flush()
            header = line[1:].strip()
            if not header:
                raise FormatError(f"line {lineno}: header has no id")
            token, _, rest = header.partition(" ")
            if token in seen:
                raise DuplicateIdError(f"duplicate record id '{token}'")
            seen.add(token)
            rec_id = token
            description = rest.strip()
            parts = []
        elif line.strip():
            if rec_id is None:
                raise FormatError(
                    f"line {lineno}: sequence data before first '>' header"
                )
            parts.append(line)
    flush()
    return records


def write_fasta(records: Iterable[SequenceRecord], path: str | Path) -> None:
    """Write records as FASTA, one body line per record."""
    with open(path, "w", newline="\n") as fh:
        for rec in records:
            header = f">{rec.id} {rec.description}".rstrip()
            fh.write(f"{header}\n{rec.sequence}\n")


def load_labeled_csv(path: str | Path) -> LabeledDataset:
    """Load an ``id,sequence,label`` CSV; sequences are cleaned on load."""
    with open(path, "r", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise FormatError(f"{path}: file is empty") from None
        col = {}
        for name in LABELED_CSV_HEADER:
            if name not in header:
                raise SchemaError(f"{path}: missing column '{name}'")
            col[name] = header.index(name)

        records: list[SequenceRecord] = []
        labels: list[int] = []
        seen: set[str] = set()
        for row_num, row in enumerate(reader, start=1):
            if not row:
                continue
            if len(row) < len(header):
                raise FormatError(f"{path}: row {row_num} has too few fields")
            rec_id = row[col["id"]].strip()
            if not rec_id:
                raise FormatError(f"{path}: row {row_num} has an empty id")
            if rec_id in seen:
                raise DuplicateIdError(f"{path}: duplicate record id '{rec_id}'")
            seen.add(rec_id)
            label_text = row[col["label"]].strip()
            if label_text not in ("0", "1"):
                raise FormatError(
                    f"{path}: row {row_num}: label must be 0 or 1, got '{label_text}'"
                )
            try:
                seq = clean_sequence(row[col["sequence"]])
            except EmptySequenceError:
                raise FormatError(
                    f"{path}: row {row_num}: empty sequence for '{rec_id}'"
                ) from None
            records.append(SequenceRecord(rec_id, "", seq))
            labels.append(int(label_text))
    return LabeledDataset(records, labels)


def write_labeled_csv(dataset: LabeledDataset, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(LABELED_CSV_HEADER)
        for rec, label in zip(dataset.records, dataset.labels):
            writer.writerow([rec.id, rec.sequence, label])


def _stratified_indices(
    dataset: LabeledDataset, spec: SplitSpec
) -> tuple[list[int], list[int]]:
    train_idx: list[int] = []
    test_idx: list[int] = []
    for cls in (0, 1):
        members = [i for i, y in enumerate(dataset.labels) if y == cls]
        if len(members) < 2:
            raise StratificationError(
                f"class {cls} has {len(members)} member(s); need at least 2 "
                "for a stratified split"
            )
        perm = rng_for(spec.seed, cls).permutation(len(members))
        n_train = math.floor(spec.train_fraction * len(members))
        train_idx.extend(members[p] for p in perm[:n_train])
        test_idx.extend(members[p] for p in perm[n_train:])
    return train_idx, test_idx


def _grouped_indices(
    dataset: LabeledDataset, spec: SplitSpec
) -> tuple[list[int], list[int]]:
    groups: dict[str, list[int]] = {}
    for i, rec in enumerate(dataset.records):
        groups.setdefault(rec.id.split("-", 1)[0], []).append(i)
    keys = list(groups)
    perm = rng_for(spec.seed, 3).permutation(len(keys))
    target = math.floor(spec.train_fraction * len(dataset))
    train_idx: list[int] = []
    test_idx: list[int] = []
    for p in perm:
        bucket = train_idx if len(train_idx) < target else test_idx
        bucket.extend(groups[keys[p]])
    return train_idx, test_idx


def split_dataset(
    dataset: LabeledDataset, spec: SplitSpec
) -> tuple[LabeledDataset, LabeledDataset]:
    """Split into disjoint train/test datasets, preserving dataset order.

    Stratified splits put floor(train_fraction * class_size) of each class
    into train. Grouped splits assign whole id-prefix groups and ignore
    stratification.
    """
    if spec.group_by_prefix:
        train_idx, test_idx = _grouped_indices(dataset, spec)
    elif spec.stratified:
        train_idx, test_idx = _stratified_indices(dataset, spec)
    else:
        perm = rng_for(spec.seed, 2).permutation(len(dataset))
        n_train = math.floor(spec.train_fraction * len(dataset))
        train_idx = [int(i) for i in perm[:n_train]]
        test_idx = [int(i) for i in perm[n_train:]]
    return dataset.subset(sorted(train_idx)), dataset.subset(sorted(test_idx))

"""Append-only JSON-lines result cache with an in-memory index.

The first line is a header recording the schema version and the hash
algorithm used for polynomial keys; every further line is one record
{"key": [poly_hash, group_key, op], "value": ...}.  A single writer
appends; readers tolerate a partial trailing line (a crashed writer).
Cache keys use the canonical polynomial text and subgroup serialization,
so hits must reproduce byte-identical output.
"""

import hashlib
import json
import os

from .laurent import LaurentPoly, format_poly

SCHEMA_VERSION = 1
HASH_ALGORITHM = "sha256-of-canonical-text"
CACHE_FILENAME = "torusdiv-cache.jsonl"


def poly_key(f: LaurentPoly) -> str:
    return hashlib.sha256(format_poly(f).encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str):
        os.makedirs(directory, exist_ok=True)
        self.path = os.path.join(directory, CACHE_FILENAME)
        self.index: dict[tuple, object] = {}
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            with open(self.path, "w") as fh:
                fh.write(
                    json.dumps(
                        {"schema": SCHEMA_VERSION, "hash": HASH_ALGORITHM}
                    )
                    + "\n"
                )
            return
        with open(self.path) as fh:
            lines = fh.read().splitlines()
        if not lines:
            return
        header = json.loads(lines[0])
        if header.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported cache schema in {self.path}")
        for line in lines[1:]:
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                break  # partial trailing line from an interrupted writer
            self.index[tuple(record["key"])] = record["value"]

    def get(self, key: tuple):
        return self.index.get(tuple(key))

    def put(self, key: tuple, value) -> None:
        key = tuple(key)
        if key in self.index:
            return
        self.index[key] = value
        with open(self.path, "a") as fh:
            fh.write(json.dumps({"key": list(key), "value": value}) + "\n")

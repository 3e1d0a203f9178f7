"""Rendering of result documents as markdown, CSV and JSON, and reading them back."""

from __future__ import annotations

import csv
import io
import json

from . import __version__
from .pipeline import decomposition_text

MD_HEADER = ["ideal decomposition", "group scheme decomposition", "p-rank", "a-number",
             "circular words"]
CSV_FIELDS = ["alpha", "beta", "signature", "decomposition", "f", "a", "words", "profile"]


def record_to_dict(r, provenance=False):
    d = {
        "alpha": r.alpha,
        "beta": r.beta,
        "signature": r.signature.label(),
        "profile": [[size, kind] for size, kind in r.signature.profile],
        "words": [str(w) for w in r.words.words()],
        "pieces": [{"words": [str(w) for w in p], "name": n.text()}
                   for p, n in zip(r.pieces, r.names)],
        "decomposition": decomposition_text(r.names, "unicode"),
        "f": r.f,
        "a": r.a,
    }
    if provenance and r.provenance is not None:
        p = r.provenance
        d["provenance"] = {"iota": p.iota, "delta": p.delta,
                           "cm_type": list(p.cm_type), "sigma": p.sigma}
    return d


def make_meta(command, **fields):
    meta = {"tool": "cmred", "version": __version__, "command": command}
    meta.update(fields)
    return meta


def render_json(meta, rows):
    return json.dumps({"meta": meta, "records": rows}, indent=2, ensure_ascii=False) + "\n"


def _md_table(header, rows):
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join(" --- " for _ in header) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def _md_meta(meta):
    items = ", ".join(f"{k}={v}" for k, v in meta.items())
    return f"<!-- {items} -->\n\n"


def render_records(meta, rows, fmt):
    if fmt == "json":
        return render_json(meta, rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for d in rows:
            w.writerow([d["alpha"], d["beta"], d["signature"], d["decomposition"], d["f"],
                        d["a"], " ".join(d["words"]),
                        " ".join(f"{s}{'p' if k == 'pair' else 's'}" for s, k in d["profile"])])
        return buf.getvalue()
    if fmt == "md":
        table = [(d["signature"], d["decomposition"], d["f"], d["a"], ", ".join(d["words"]))
                 for d in rows]
        return _md_meta(meta) + _md_table(MD_HEADER, table)
    raise ValueError(f"unknown format {fmt!r}")


def render_table(meta, header, rows, fmt, keys=None):
    """Generic table for classify / aggregate / list-groups output."""
    keys = keys or header
    if fmt == "json":
        return render_json(meta, [dict(zip(keys, r)) for r in rows])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        return _md_meta(meta) + _md_table(header, rows)
    raise ValueError(f"unknown format {fmt!r}")


def _type_from_label(label):
    """``(alpha, beta)`` from a label like ``𝒫₁𝒫₁ᶜ𝒫₂`` or ``P1P1cP2``."""
    alpha = label.count("𝒫") + label.count("P")
    conj = label.count("ᶜ") + label.count("c")
    return alpha, alpha - conj


def record_keys_from_json(text):
    doc = json.loads(text)
    return {(d["alpha"], d["beta"], tuple(d["words"])) for d in doc["records"]}


def record_keys_from_csv(text):
    rows = csv.DictReader(io.StringIO(text))
    return {(int(d["alpha"]), int(d["beta"]), tuple(d["words"].split())) for d in rows}


def record_keys_from_markdown(text):
    keys = set()
    for line in text.splitlines():
        if not line.startswith("| ") or line.startswith(("| ideal", "| ---")):
            continue
        cells = [c.strip() for c in line.strip("|").split("|")]
        alpha, beta = _type_from_label(cells[0])
        keys.add((alpha, beta, tuple(w.strip() for w in cells[4].split(","))))
    return keys

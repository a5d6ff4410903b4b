"""Input normalisation helpers: composition, case folding, offset recovery.

Romanised input is folded to lowercase and composed to the precomposed
letters the tables use, because real-world text often arrives as base
letter + combining mark or with stray capitals. Offsets reported in
diagnostics must keep indexing the original bytes, so the fold also knows
how to walk back from a folded position to the original slice.
"""

import unicodedata


def fold_iast(text: str) -> str:
    """Compose and lowercase romanised text. Idempotent."""
    if text.isascii():
        return text.lower()
    composed = unicodedata.normalize("NFC", text)
    return unicodedata.normalize("NFC", composed.lower())


def _chunks(text: str):
    """Split into minimal units: a base scalar plus its combining marks."""
    start = 0
    n = len(text)
    for i in range(1, n + 1):
        if i == n or not unicodedata.combining(text[i]):
            yield text[start:i]
            start = i


def original_span(original: str, folded_index: int) -> tuple[int, str]:
    """Map an index in fold_iast(original) back to (byte offset, slice).

    Used only on the error path; linear in the line length.
    """
    if original.isascii():
        # Folding is 1:1 there.
        idx = min(folded_index, max(len(original) - 1, 0))
        return idx, original[idx : idx + 1]
    byte_off = 0
    folded_off = 0
    for chunk in _chunks(original):
        folded_chunk = fold_iast(chunk)
        if folded_off + len(folded_chunk) > folded_index:
            return byte_off, chunk
        folded_off += len(folded_chunk)
        byte_off += len(chunk.encode("utf-8"))
    return byte_off, ""


def byte_offset(text: str, index: int) -> int:
    """UTF-8 byte offset of character ``index`` in ``text``."""
    if text.isascii():
        return index
    return len(text[:index].encode("utf-8"))

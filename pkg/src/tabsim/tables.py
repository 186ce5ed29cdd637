"""Table data model: tokenization, span expansion, orientation, id encoding.

A table is a caption plus a rectangular grid of text cells.  Vertical
tables are rotated to horizontal layout, merged cells are expanded into
copies, and captions/cells are mapped to fixed-size integer id arrays
(cropped or zero-padded) for the neural encoders.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DataError

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

PAD_ID = 0
UNK_ID = 1

# Separator characters are replaced by spaces before splitting.  The decimal
# point is excluded so numeric tokens such as "0.05" survive intact; dots are
# stripped from token edges instead.
SEPARATOR_CHARS = '!"#$%&()*+,-/:;<=>?@[\\]^_`{|}~'
_SEP_TABLE = str.maketrans({c: " " for c in SEPARATOR_CHARS})


def tokenize(text: str) -> list[str]:
    """Lowercase `text`, filter punctuation and split on whitespace."""
    parts = text.lower().translate(_SEP_TABLE).split()
    return [tok for tok in (part.strip(".") for part in parts) if tok]


@dataclass(frozen=True)
class Cell:
    """One grid cell; spans > 1 mark merged cells in the source layout."""

    text: str
    row_span: int = 1
    col_span: int = 1

    def __post_init__(self):
        if self.row_span < 1 or self.col_span < 1:
            raise DataError(
                f"cell spans must be >= 1, got row_span={self.row_span}, "
                f"col_span={self.col_span}"
            )


@dataclass(frozen=True)
class ShapeConfig:
    """Fixed encoder dimensions: rows, columns, tokens per cell/caption."""

    n_rows: int = 9
    n_cols: int = 9
    tokens_per_cell: int = 4
    tokens_per_caption: int = 12

    def __post_init__(self):
        for name in ("n_rows", "n_cols", "tokens_per_cell", "tokens_per_caption"):
            if getattr(self, name) < 1:
                raise DataError(f"ShapeConfig.{name} must be >= 1")


@dataclass
class RawTable:
    id: str
    caption: str
    orientation: str
    grid: list[list[Cell]]
    has_header_row: bool = True

    def __post_init__(self):
        if not self.id:
            raise DataError("table id must be nonempty")
        if self.orientation not in (HORIZONTAL, VERTICAL):
            raise DataError(
                f"table {self.id!r}: orientation must be "
                f"{HORIZONTAL!r} or {VERTICAL!r}, got {self.orientation!r}"
            )


@dataclass(eq=False)
class EncodedTable:
    """Integer-id view of a table: (tokens_per_caption,) and (N, M, tokens_per_cell)."""

    caption_ids: np.ndarray
    content_ids: np.ndarray


def expand_merged_cells(grid: list[list[Cell]]) -> list[list[Cell]]:
    """Expand merged cells into blocks of span-1 copies.

    Input rows follow HTML-style span semantics: a cell spanning s rows
    occupies its column slots in the s-1 following rows, which therefore
    list fewer cells.  The result is a rectangular grid of span-1 cells,
    or a DataError when spans overflow, overlap, or leave holes.
    """
    n_rows = len(grid)
    occupied: dict[tuple[int, int], Cell] = {}
    for r, row in enumerate(grid):
        col = 0
        for cell in row:
            while (r, col) in occupied:
                col += 1
            if r + cell.row_span > n_rows:
                raise DataError(
                    f"cell at row {r}, column {col} spans {cell.row_span} rows "
                    f"but only {n_rows - r} remain"
                )
            for rr in range(r, r + cell.row_span):
                for cc in range(col, col + cell.col_span):
                    if (rr, cc) in occupied:
                        raise DataError(f"overlapping cell spans at row {rr}, column {cc}")
                    occupied[(rr, cc)] = Cell(cell.text)
            col += cell.col_span
    if not occupied:
        return [[] for _ in range(n_rows)]
    width = max(c for _, c in occupied) + 1
    out = []
    for r in range(n_rows):
        row_out = []
        for c in range(width):
            if (r, c) not in occupied:
                raise DataError(
                    f"grid is not rectangular after span expansion: "
                    f"missing cell at row {r}, column {c}"
                )
            row_out.append(occupied[(r, c)])
        out.append(row_out)
    return out


def normalize_orientation(table: RawTable) -> RawTable:
    """Return a horizontal view of `table`, transposing vertical grids."""
    if table.orientation == HORIZONTAL:
        return table
    grid = [list(col) for col in zip(*table.grid)]
    return replace(table, orientation=HORIZONTAL, grid=grid)


def encode_table(table: RawTable, vocab, config: ShapeConfig) -> EncodedTable:
    """Map a horizontal, span-expanded table to fixed-size id arrays.

    Truncation keeps the first rows/columns/tokens; unused positions hold
    the pad id.  Tokens missing from `vocab` map to the unk id.
    """
    caption_ids = np.zeros(config.tokens_per_caption, dtype=np.int64)
    toks = tokenize(table.caption)[: config.tokens_per_caption]
    caption_ids[: len(toks)] = [vocab.id(t) for t in toks]

    content_ids = np.zeros(
        (config.n_rows, config.n_cols, config.tokens_per_cell), dtype=np.int64
    )
    for r, row in enumerate(table.grid[: config.n_rows]):
        for c, cell in enumerate(row[: config.n_cols]):
            ids = [vocab.id(t) for t in tokenize(cell.text)[: config.tokens_per_cell]]
            content_ids[r, c, : len(ids)] = ids
    return EncodedTable(caption_ids=caption_ids, content_ids=content_ids)

"""Dataset container shared by screening, selection, and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DataError


@dataclass
class Dataset:
    """An (n, p) covariate matrix with a length-n response.

    All entries must be finite. ``names`` defaults to ``X1 .. Xp``.
    """

    covariates: np.ndarray
    response: np.ndarray
    names: list[str] = field(default_factory=list)
    response_name: str = "Y"

    def __post_init__(self):
        self.covariates = np.ascontiguousarray(self.covariates, dtype=np.float64)
        self.response = np.asarray(self.response, dtype=np.float64).ravel()
        if self.covariates.ndim != 2:
            raise DataError("covariates must be a 2-D matrix")
        if self.covariates.shape[0] != self.response.shape[0]:
            raise DataError(
                f"covariates have {self.covariates.shape[0]} rows but the "
                f"response has {self.response.shape[0]} entries"
            )
        if not np.all(np.isfinite(self.covariates)):
            i, j = np.argwhere(~np.isfinite(self.covariates))[0]
            name = self.names[j] if self.names else f"X{j + 1}"
            raise DataError(f"non-finite covariate at row {i + 1}, column {name}")
        if not np.all(np.isfinite(self.response)):
            i = int(np.argwhere(~np.isfinite(self.response))[0][0])
            raise DataError(f"non-finite response at row {i + 1}")
        if not self.names:
            self.names = [f"X{j + 1}" for j in range(self.covariates.shape[1])]
        elif len(self.names) != self.covariates.shape[1]:
            raise DataError(
                f"{len(self.names)} names for {self.covariates.shape[1]} columns"
            )

    @property
    def n(self) -> int:
        return self.covariates.shape[0]

    @property
    def p(self) -> int:
        return self.covariates.shape[1]

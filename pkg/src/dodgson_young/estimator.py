"""scikit-learn style wrapper around :func:`score_all`.

``fit`` takes one profile as an ``(n_voters, m)`` array of rankings (most
preferred first, candidates numbered from 1) and stores the election result.

>>> est = EditDistanceScorer(rule="young", mode="exact").fit([[1, 2], [1, 2], [2, 1]])
>>> est.scores_.tolist()
[0.0, 2.0]
>>> est.predict().tolist()
[1]
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .profile import TieConvention, build_profile
from .rules import score_all
from .validation import ENGINES, MODES, RULES, check_choice, check_profile_array


class EditDistanceScorer(BaseEstimator):
    """Dodgson or Young scores of every candidate in a profile.

    Parameters
    ----------
    rule : {'dodgson', 'young'}
    mode : {'greedy', 'exact'}
    convention : {'strict', 'weak'}
    engine : {'queue', 'naive'}
        Only used by greedy mode.

    Attributes
    ----------
    result_ : ElectionResult
    scores_ : ndarray of shape (m,)
        Score per candidate (``inf`` for UNSCORABLE), index ``c - 1``.
    ranking_ : list of tuples
        Candidates grouped by score, ascending.
    winner_set_ : ndarray
    n_candidates_ : int
    """

    def __init__(self, rule="dodgson", mode="greedy", convention="strict", engine="queue"):
        self.rule = rule
        self.mode = mode
        self.convention = convention
        self.engine = engine

    def _validate_params(self):
        check_choice(self.rule, RULES, "rule")
        check_choice(self.mode, MODES, "mode")
        check_choice(self.engine, ENGINES, "engine")
        TieConvention.coerce(self.convention)

    def fit(self, X, y=None):
        self._validate_params()
        arr = check_profile_array(X)
        profile = build_profile(arr.tolist(), arr.shape[1])
        self.result_ = score_all(profile, self.rule, self.mode, self.convention, self.engine)
        self.n_candidates_ = profile.m
        self.scores_ = np.array([float(r.score) for r in self.result_.reports])
        self.ranking_ = list(self.result_.ranking)
        self.winner_set_ = np.array(self.result_.winner_set)
        return self

    def transform(self, X=None):
        """Score vector of the fitted profile, or of ``X`` when given."""
        if X is not None:
            return self.fit(X).scores_.copy()
        check_is_fitted(self, "result_")
        return self.scores_.copy()

    def fit_transform(self, X, y=None):
        return self.fit(X).scores_.copy()

    def predict(self, X=None):
        """Winner set of the fitted profile, or of ``X`` when given."""
        if X is not None:
            self.fit(X)
        check_is_fitted(self, "result_")
        return self.winner_set_.copy()

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conftest import EX5_ROWS
from dodgson_young import EditDistanceScorer


def test_fit_ex5_dodgson_exact():
    est = EditDistanceScorer(rule="dodgson", mode="exact").fit(EX5_ROWS)
    assert est.scores_.tolist() == [1, 4, 4, 2, 5]
    assert est.predict().tolist() == [1]
    assert est.ranking_[0] == (1,)
    assert est.n_candidates_ == 5


def test_transform_marks_unscorable_as_inf():
    scores = EditDistanceScorer(rule="young").fit_transform(np.array(EX5_ROWS))
    assert np.isinf(scores[[1, 4]]).all() and scores[3] == 2


def test_params_roundtrip():
    est = EditDistanceScorer(rule="young", convention="weak")
    assert est.get_params() == {"rule": "young", "mode": "greedy",
                                "convention": "weak", "engine": "queue"}
    twin = clone(est).set_params(engine="naive")
    assert twin.engine == "naive" and est.engine == "queue"


def test_not_fitted():
    with pytest.raises(NotFittedError):
        EditDistanceScorer().predict()


@pytest.mark.parametrize("X", [[1, 2, 3], [[1, 2], [1, 1]], [[1.5, 2.0]], [[]]])
def test_bad_input(X):
    with pytest.raises(ValueError):
        EditDistanceScorer().fit(X)


def test_bad_param():
    with pytest.raises(ValueError):
        EditDistanceScorer(rule="borda").fit(EX5_ROWS)

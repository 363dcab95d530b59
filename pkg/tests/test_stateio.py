import numpy as np
import pytest

from ccrlab import stateio
from ccrlab.exceptions import ValidationError
from ccrlab.states import BipartitePureState, DensityMatrix, random_density, x_family_state


def test_density_round_trip(tmp_path, rng):
    rho = random_density(3, 2, rng)
    path = tmp_path / "rho.json"
    stateio.dump(rho, path)
    back = stateio.load(path)
    assert isinstance(back, DensityMatrix)
    np.testing.assert_array_equal(back.matrix, rho.matrix)


def test_ket_round_trip(tmp_path):
    psi = x_family_state(0.3)
    path = tmp_path / "psi.json"
    stateio.dump(psi, path)
    back = stateio.load(path)
    assert isinstance(back, BipartitePureState)
    assert (back.dim_a, back.dim_b) == (2, 2)
    np.testing.assert_array_equal(back.amplitudes, psi.amplitudes)


@pytest.mark.parametrize(
    "text, field",
    [
        ("[1, 2]", "document"),
        ('{"foo": 1}', "document"),
        ('{"dim": 2}', "matrix"),
        ('{"matrix": []}', "dim"),
        ('{"dim": 0, "matrix": []}', "dim"),
        ('{"dim": 2, "matrix": [[[1,0],[0,0]]]}', "matrix"),
        ('{"dim": 2, "matrix": [[[1,0],[0,0]], [[0,0]]]}', "matrix[1]"),
        ('{"dim": 2, "matrix": [[[1,0],[0,0]], [[0,0],"x"]]}', "matrix[1][1]"),
        ('{"dims": [2], "amplitudes": []}', "dims"),
        ('{"dims": [2, 2], "amplitudes": [[1,0]]}', "amplitudes"),
        ('{"dims": [2, 1], "amplitudes": [[1,0], [0, true]]}', "amplitudes[1]"),
        ('{"dim": 2,\n', "document"),
    ],
)
def test_malformed_documents_name_the_field(text, field):
    with pytest.raises(stateio.StateFileError) as info:
        stateio.loads(text)
    assert info.value.invariant == field
    assert str(info.value).startswith(f"{field}:")


def test_invalid_json_reports_position():
    with pytest.raises(stateio.StateFileError, match="line 2 column 1"):
        stateio.loads('{"dim": 2,\n')


def test_physical_validation_still_applies():
    doc = '{"dim": 2, "matrix": [[[2,0],[0,0]], [[0,0],[-1,0]]]}'
    with pytest.raises(ValidationError):
        stateio.loads(doc)

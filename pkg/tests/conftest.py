import numpy as np
import pytest

from ixp_placement.geodesy import DistanceMatrix, build_distance_matrix
from ixp_placement.locations import bundled_locations

from oracles import TABLE1_ISO, table1_distance


@pytest.fixture(scope="session")
def ioa_locations():
    return bundled_locations()


@pytest.fixture(scope="session")
def ioa_matrix(ioa_locations):
    return build_distance_matrix(ioa_locations)


@pytest.fixture(scope="session")
def table1_matrix(ioa_locations):
    """The golden table as a valid (symmetrized) DistanceMatrix.

    Cells carry the published values rather than ones recomputed from the
    bundled coordinates, so exact derived numbers can be asserted on top.
    """
    n = len(TABLE1_ISO)
    cells = np.zeros((n, n))
    for i, a in enumerate(TABLE1_ISO):
        for j, b in enumerate(TABLE1_ISO):
            if i != j:
                cells[i, j] = table1_distance(a, b)
    return DistanceMatrix(locations=tuple(ioa_locations), cells=cells)

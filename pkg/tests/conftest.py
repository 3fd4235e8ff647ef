from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("latmod", deadline=None, max_examples=40)
settings.load_profile("latmod")


# A hand-written instance that is NOT a multiplication module: a 3-chain of
# scalars acting on a diamond carrier, plus a user expansion table under
# which the two delta-primary formulations genuinely disagree at O.
SEPARATOR_DOC = """#LATSPEC 1
# 3-chain scalars, diamond carrier
lattice
elements 0 1 m
leq 0 m
leq m 1
mul 0 0 0
mul 0 1 0
mul 0 m 0
mul 1 1 1
mul 1 m m
mul m m m
end
module
elements I O X Y
leq O X
leq O Y
leq X I
leq Y I
act 0 I O
act 0 O O
act 0 X O
act 0 Y O
act 1 I I
act 1 O O
act 1 X X
act 1 Y Y
act m I X
act m O O
act m X X
act m Y O
end
expansion dsep on module
map I I
map O X
map X X
map Y I
end
"""

# A faithfulness-failing instance: the middle scalar annihilates the whole
# 2-chain carrier, so (O_M : I_M) = m != 0.
NONFAITHFUL_DOC = """#LATSPEC 1
lattice
elements 0 1 m
leq 0 m
leq m 1
mul 0 0 0
mul 0 1 0
mul 0 m 0
mul 1 1 1
mul 1 m m
mul m m m
end
module
elements I O
leq O I
act 0 I O
act 0 O O
act 1 I I
act 1 O O
act m I O
act m O O
end
"""


@pytest.fixture(scope="session")
def z12():
    from latmod.generators import gen_zn

    return gen_zn(12)


@pytest.fixture(scope="session")
def separator_bundle():
    from latmod.latspec import load_instance, parse_latspec

    return load_instance(parse_latspec(SEPARATOR_DOC), label="separator")


@pytest.fixture(scope="session")
def nonfaithful_bundle():
    from latmod.latspec import load_instance, parse_latspec

    return load_instance(parse_latspec(NONFAITHFUL_DOC), label="nonfaithful")

s = f'{1 + 1} import not_real'
from .  import (
    Thing,
); y = 2
from .numpy.client import client, request; y = 2

x = 1; from requests.client import (
    Thing as ux,
)
from _private.x import (
    path as np,
    client,
    request as np,
    path as pd,
)
from six.x import path

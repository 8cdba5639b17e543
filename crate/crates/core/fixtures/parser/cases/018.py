total = (1 +
         2)  # trailing import comment
import numpy.path
from yaml.parse.client import (
    request,
)

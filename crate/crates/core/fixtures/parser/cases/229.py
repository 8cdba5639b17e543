from __future__ import print_function
from . matplotlib.core import (
    request,
    core,
    a as pd,
    pyplot,
)
import yaml.parse.path ,  _private.pyplot ,  mod9.parse.parse; y = 2

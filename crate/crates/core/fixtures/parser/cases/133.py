from six import core
from ..i3 import (
    x as ux,
    path,
    pyplot,
    path,
); y = 2
# import commented_out

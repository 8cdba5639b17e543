# import commented_out
import json; y = 2
s = f'{1 + 1} import not_real'
from _private.client import (b_c as np)

raw = r'\import' + b'from x import y'.decode()
text = 'import fake_73'
from matplotlib import (client, parse as pd)
raw = r'\import' + b'from x import y'.decode()
from pandas.parse import *; y = 2
# import commented_out

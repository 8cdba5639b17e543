for item in range(3):
    from six.path import *
    raw = r'\import' + b'from x import y'.decode()
from requests import Thing

pass
for item in range(3):
    total = (1 +
             2)  # trailing import comment
    text = 'import fake_16'
    total = (1 +
             2)  # trailing import comment
    raw = r'\import' + b'from x import y'.decode()
    from . import (
        request,
    )
from collections import parse, client, path as pd, x as ux
text = 'import fake_43'
f = lambda x: x + 1

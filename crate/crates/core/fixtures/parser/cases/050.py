for item in range(3):
    for item in range(3):
        f = lambda x: x + 1
        try: import numpy.x.x
        except Exception: pass
        f = lambda x: x + 1
        import bs4.pyplot as plt
        if cond:
            total = (1 +
                     2)  # trailing import comment
            import i3.request as plt
            for i in []: import sys.pyplot
            # import commented_out
        from urllib.path import parse, pyplot
    from matplotlib.pyplot import Thing
    for item in range(3):
        total = (1 +
                 2)  # trailing import comment
        # import commented_out
        from ..requests import core, path
        raw = r'\import' + b'from x import y'.decode()
total = (1 +
         2)  # trailing import comment
total = (1 +
         2)  # trailing import comment
for i in []: import i3.request as pd
if flag: import kazoo.parse.core as pd

# import commented_out
f = lambda x: x + 1
f = lambda x: x + 1
if flag: import json.parse.client as plt,numpy.client.client as pd
for item in range(3):
    from urllib.request import b_c
    raw = r'\import' + b'from x import y'.decode()
    import sys.path as ux
    with open('f') as fh:
        f = lambda x: x + 1
        text = 'import fake_1'
    x = 1; import yaml.parse.path as np
    text = 'import fake_51'
# import commented_out

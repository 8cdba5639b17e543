# import commented_out
text = 'import fake_50'
with open('f') as fh:
    total = (1 +
             2)  # trailing import comment
    try: import sys ,  bs4.parse ,  six.core
    except Exception: pass
    value = {'a': 1, 'import': 2}[
        'a']
    from urllib.client import pyplot, parse, parse, parse
    with ctx: import requests,six as pd,kazoo

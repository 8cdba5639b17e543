#!/usr/bin/env python
with open('f') as fh:
    # import commented_out
    total = (1 +
             2)  # trailing import comment
text = 'import fake_87'

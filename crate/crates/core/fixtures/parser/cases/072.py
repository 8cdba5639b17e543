#!/usr/bin/env python
text = 'import fake_65'
text = 'import fake_83'

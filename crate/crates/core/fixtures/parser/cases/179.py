import kazoo.pyplot
import _private.parse as plt
f = lambda x: x + 1

try:
    import i3
except ImportError:
    i3 = None

print 'window manager bindings:', i3 is not None

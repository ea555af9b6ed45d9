# pcfcolor - proper conflict-free list coloring

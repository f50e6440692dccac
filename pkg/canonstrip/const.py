"""canonstrip constants."""

__version__ = "0.1.0.dev0"

TOOL_NAME = "canonstrip"

BUILTIN_CATALOGS = ("smooth-dim1", "smooth-dim2", "smooth-dim3")

SCAN_FAMILIES = ("dp", "fano3", "surface", "threefold")

# Process exit codes used by the command line interface.
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3

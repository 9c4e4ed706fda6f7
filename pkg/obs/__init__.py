# obs package - wall-clock run tracing

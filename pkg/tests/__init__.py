"""
Test Suite for the Dunkl Process Laboratory

- Simple, focused tests
- Exact closed forms wherever one exists; seeded ensembles otherwise
- No network, no files outside pytest's tmp_path
"""

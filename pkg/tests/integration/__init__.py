# ==============================================================================
# Integration Tests Package
# ==============================================================================
# Purpose: Test domain interactions and cross-domain workflows
# ============================================================================== 
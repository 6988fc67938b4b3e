"""
Django Signals for covering-family events

Signals let applications observe verification and construction progress
without touching the library code, e.g. to persist intermediate reports,
collect timings or drive a progress display.

Signal Documentation:
    - family_verified: Emitted after every covering verification
    - stage_verified: Emitted after each verified stage of the upper-bound pipeline
    - iteration_step_completed: Emitted after each Alon–Alweiss step
    - certificate_verified: Emitted after a coloring certificate is checked

Usage:
    ```python
    from django.dispatch import receiver
    from django_zpcover.signals import stage_verified

    @receiver(stage_verified)
    def log_stage(sender, stage, family, report, **kwargs):
        print(stage, family.size, report.is_covering)
    ```
"""

from django.dispatch import Signal


# Verification Signals
# ====================

family_verified = Signal()
"""
Signal emitted after ``is_covering`` finishes.

Sender: CoveringFamily class
Providing Arguments:
    - family (CoveringFamily): The family that was checked
    - cover (CoverSet): The set every ordered pair had to realise
    - report (CoverageReport): The outcome, including the first failure

Timing: Sent for passing and failing checks alike.
"""

stage_verified = Signal()
"""
Signal emitted after one stage of ``build_upperbound_family`` is verified.

Sender: the string "pipeline"
Providing Arguments:
    - stage (str): "F1", "F2" or "F3"
    - family (CoveringFamily): The stage output
    - report (CoverageReport): The passing report

Timing: Sent only for passing stages; a failing stage raises CoverageError.
"""

iteration_step_completed = Signal()
"""
Signal emitted after each verified step of ``aa_iterate``.

Sender: the string "aa_iterate"
Providing Arguments:
    - step (IterationStep): z, multiplier, part statistics, size and length
"""

certificate_verified = Signal()
"""
Signal emitted after ``verify_certificate`` runs.

Sender: ColoringCertificate class
Providing Arguments:
    - certificate (ColoringCertificate): The checked certificate
    - verdict (CertificateVerdict): ok flag and first violating pair
"""

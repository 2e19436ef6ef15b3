from django.db import models


class VerificationRun(models.Model):
    """Model reprezentujący jedno uruchomienie wyczerpującej weryfikacji."""

    class Status(models.IntegerChoices):
        PASSED = 0, 'Passed'
        FAILED = 1, 'Failed'

    timestamp = models.DateTimeField(
        auto_now_add=True,
        help_text='Time when the run finished'
    )
    max_crossings = models.PositiveIntegerField(
        help_text='Largest crossing number enumerated'
    )
    pair_max_crossings = models.PositiveIntegerField(
        default=0,
        help_text='Largest summand size for the connected-sum checks'
    )
    diagrams_checked = models.PositiveIntegerField(default=0)
    pairs_checked = models.PositiveIntegerField(default=0)
    violation_count = models.PositiveIntegerField(default=0)
    status = models.IntegerField(
        choices=Status.choices,
        default=Status.PASSED,
        help_text='PASSED when no property was violated'
    )
    duration_seconds = models.FloatField(default=0.0)
    report = models.JSONField(
        default=dict,
        help_text='Full property report'
    )

    class Meta:
        ordering = ['-timestamp', '-id']
        verbose_name = 'Verification run'
        verbose_name_plural = 'Verification runs'

    def __str__(self):
        return (f"Run {self.id}: c <= {self.max_crossings}, "
                f"{self.violation_count} violations ({self.get_status_display()})")

    def to_dict(self):
        return {
            'id': self.id,
            'timestamp': self.timestamp.strftime('%Y-%m-%d %H:%M:%S'),
            'max_crossings': self.max_crossings,
            'pair_max_crossings': self.pair_max_crossings,
            'diagrams_checked': self.diagrams_checked,
            'pairs_checked': self.pairs_checked,
            'violation_count': self.violation_count,
            'status': self.status,
            'status_display': self.get_status_display(),
            'duration_seconds': self.duration_seconds,
        }

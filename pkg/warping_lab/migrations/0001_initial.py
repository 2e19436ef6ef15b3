from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('timestamp', models.DateTimeField(auto_now_add=True, help_text='Time when the run finished')),
                ('max_crossings', models.PositiveIntegerField(help_text='Largest crossing number enumerated')),
                ('pair_max_crossings', models.PositiveIntegerField(default=0, help_text='Largest summand size for the connected-sum checks')),
                ('diagrams_checked', models.PositiveIntegerField(default=0)),
                ('pairs_checked', models.PositiveIntegerField(default=0)),
                ('violation_count', models.PositiveIntegerField(default=0)),
                ('status', models.IntegerField(choices=[(0, 'Passed'), (1, 'Failed')], default=0, help_text='PASSED when no property was violated')),
                ('duration_seconds', models.FloatField(default=0.0)),
                ('report', models.JSONField(default=dict, help_text='Full property report')),
            ],
            options={
                'verbose_name': 'Verification run',
                'verbose_name_plural': 'Verification runs',
                'ordering': ['-timestamp', '-id'],
            },
        ),
    ]

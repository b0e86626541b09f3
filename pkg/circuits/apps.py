from django.apps import AppConfig


class CircuitsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'circuits'
    verbose_name = 'Квантование схемы'

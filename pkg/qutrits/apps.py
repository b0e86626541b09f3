from django.apps import AppConfig


class QutritsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'qutrits'
    verbose_name = 'Кутритная модель'

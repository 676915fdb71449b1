class Training:
    TRAIN_FRACTION = 0.9
    FEATURE_DIM = 3


class Hyperparams:
    LATENT_DIMS = (4, 6, 8)
    PHI_DEPTHS = (2, 3, 4, 5, 6)
    PHI_WIDTHS = (32, 64, 128, 256, 512, 1024, 2048)
    RHO_WIDTHS = (4, 6, 8)
    PATIENCES = (15, 20)
    BATCH_SIZES = (32,)
    LEARNING_RATES = (0.001,)
    EPOCHS = (50, 100, 200, 400, 600, 800, 1000)
    DEFAULT_TRIALS = 50

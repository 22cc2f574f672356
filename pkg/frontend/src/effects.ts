/**
 * Bundled effect sounds, inlined as base64 WAV so the client ships with no
 * binary assets.  All three are 48 kHz mono 16-bit PCM: a two-tone warning,
 * a short click, and the tick used between sweep cues.
 */

export const EFFECT_SAMPLE_RATE = 48000;

const WARNING_WAV =
    "UklGRiRLAABXQVZFZm10IBAAAAABAAEAgLsAAAB3AQACABAAZGF0YQBLAAAAABMATQCtAC8B0AGMAl4DPwQqBRcG/wbbB6QI" +
    "UwngCUUKfgqDClMK6AlCCV4IPgfjBVAEiAKQAHH+LvzS+Wb38/SF8iXw3u2968vpFOih5nvlrOQ55CrkguRG5XbmEugZ6ofs" +
    "Vu+A8vz1v/m+/esBOQaZCvsOThOCF4YbSR+8Is8ldCidKkAsUi3LLaUt3CxuK1wpqSZaI3gfDBsjFswQFgsUBdv+fvgT8rLr" +
    "ceVn36vZVNR2zybLdsd3xDfCwsAhwATBvMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+" +
    "xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4YNRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXT" +
    "T9lt3/nl3ewD9FH7rgICCjURLhjUHhIl0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zw" +
    "sunz4pbcstZZ0aDMlMhExbzCBMEhwBfA5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8" +
    "mT62P/s/Zz/8Pb87tzjuNHIwUSudJWofzBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTO" +
    "OtPH2NneXOU67FrzpvoCAlkJkBCPFz4ehiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4" +
    "Y/FT6ozjJd0119DRB83ryInF78IjwS3AD8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45" +
    "cDx0PqU//j9+PyY++zsFOU414TDPKygm/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ" +
    "2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8Wph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsA" +
    "UPkL8vXqJuS23brXR9JvzUPJ0MUjw0TBOsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1" +
    "Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUsssSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DF" +
    "Q8lvzUfSute23Sbk9eoL8lD5qwAFCEQPThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68I" +
    "VwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnDZ8FKwAXAmcAEwkHESccSy47Pr9Rj2pbgNOcm7lT1p/wEBFULfxJqGf8fKCbPK+Ew" +
    "TjUFOfs7Jj5+P/4/pT90PnA8njkJNrwxxiw5JychpBrGE6YMWgX+/af2cO9x6MLhetuu1XHQ1svsx7/EXcLLwA/ALcAjwe/C" +
    "icXryAfN0NE11yXdjONT6mPxpfgAAFsHnQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQ" +
    "WQkCAqb6WvM67Fzl2d7H2DrTRM73yWLGkMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZAeCW5oHtq/T8+1kDrAraEcwYah+dJVEr" +
    "cjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHpWuII3C/W5dA6zD/IAcWMwubAF8AhwATB" +
    "vMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4Y" +
    "NRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXTT9lt3/nl3ewD9FH7rgICCjURLhjUHhIl" +
    "0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zwsunz4pbcstZZ0aDMlMhExbzCBMEhwBfA" +
    "5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8mT62P/s/Zz/8Pb87tzjuNHIwUSudJWof" +
    "zBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTOOtPH2NneXOU67FrzpvoCAlkJkBCPFz4e" +
    "hiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4Y/FT6ozjJd0119DRB83ryInF78IjwS3A" +
    "D8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45cDx0PqU//j9+PyY++zsFOU414TDPKygm" +
    "/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8W" +
    "ph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsAUPkL8vXqJuS23brXR9JvzUPJ0MUjw0TB" +
    "OsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUss" +
    "sSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DFQ8lvzUfSute23Sbk9eoL8lD5qwAFCEQP" +
    "ThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68IVwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnD" +
    "Z8FKwAXAmcAEwkHESccSy47Pr9Rj2pbgNOcm7lT1p/wEBFULfxJqGf8fKCbPK+EwTjUFOfs7Jj5+P/4/pT90PnA8njkJNrwx" +
    "xiw5JychpBrGE6YMWgX+/af2cO9x6MLhetuu1XHQ1svsx7/EXcLLwA/ALcAjwe/CicXryAfN0NE11yXdjONT6mPxpfgAAFsH" +
    "nQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQWQkCAqb6WvM67Fzl2d7H2DrTRM73yWLG" +
    "kMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZAeCW5oHtq/T8+1kDrAraEcwYah+dJVErcjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2" +
    "JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHpWuII3C/W5dA6zD/IAcWMwubAF8AhwATBvMJExZTIoMxZ0bLWltzz4rLpvPD791X/" +
    "sAb1DQsV2htKIkYouS2RMr02MDrdPLw+xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4YNRECCq4CUfsD9N3s+eVt30/ZtdOxzlTK" +
    "rsbKw7LBbsABwG7AssHKw67GVMqxzrXTT9lt3/nl3ewD9FH7rgICCjURLhjUHhIl0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6" +
    "vTaRMrktRihKItobCxX1DbAGVf/797zwsunz4pbcstZZ0aDMlMhExbzCBMEhwBfA5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3" +
    "qf4FBk4NaRQ/G7khwCdALScyZDboOac8mT62P/s/Zz/8Pb87tzjuNHIwUSudJWofzBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/P" +
    "ssr7xgXE2sGCwALAW8CMwZDDYsb3yUTOOtPH2NneXOU67FrzpvoCAlkJkBCPFz4ehiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9" +
    "dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4Y/FT6ozjJd0119DRB83ryInF78IjwS3AD8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDv" +
    "p/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45cDx0PqU//j9+PyY++zsFOU414TDPKygm/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/U" +
    "js8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8Wph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+" +
    "RD28Omw3YDOnLk4paiMNHU4WRA8FCKsAUPkL8vXqJuS23brXR9JvzUPJ0MUjw0TBOsAJwLHAL8KAxJrHc8v/zy7V7tos4dLn" +
    "y+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUsssSaTIAcaIxP9C68EUv3+9cvu0ucs4e7a" +
    "LtX/z3PLmseAxC/CscAJwDrARMEjw9DFQ8lvzUfSute23Sbk9eoL8lD5qwAFCEQPThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/" +
    "Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68IVwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnDZ8FKwAXAmcAEwkHESccSy47Pr9Rj2pbg" +
    "NOcm7lT1p/wEBFULfxJqGf8fKCbPK+EwTjUFOfs7Jj5+P/4/pT90PnA8njkJNrwxxiw5JychpBrGE6YMWgX+/af2cO9x6MLh" +
    "etuu1XHQ1svsx7/EXcLLwA/ALcAjwe/CicXryAfN0NE11yXdjONT6mPxpfgAAFsHnQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/" +
    "8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQWQkCAqb6WvM67Fzl2d7H2DrTRM73yWLGkMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZ" +
    "AeCW5oHtq/T8+1kDrAraEcwYah+dJVErcjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHp" +
    "WuII3C/W5dA6zD/IAcWMwubAF8AhwATBvMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+" +
    "xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4YNRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXT" +
    "T9lt3/nl3ewD9FH7rgICCjURLhjUHhIl0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zw" +
    "sunz4pbcstZZ0aDMlMhExbzCBMEhwBfA5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8" +
    "mT62P/s/Zz/8Pb87tzjuNHIwUSudJWofzBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTO" +
    "OtPH2NneXOU67FrzpvoCAlkJkBCPFz4ehiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4" +
    "Y/FT6ozjJd0119DRB83ryInF78IjwS3AD8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45" +
    "cDx0PqU//j9+PyY++zsFOU414TDPKygm/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ" +
    "2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8Wph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsA" +
    "UPkL8vXqJuS23brXR9JvzUPJ0MUjw0TBOsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1" +
    "Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUsssSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DF" +
    "Q8lvzUfSute23Sbk9eoL8lD5qwAFCEQPThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68I" +
    "VwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnDZ8FKwAXAmcAEwkHESccSy47Pr9Rj2pbgNOcm7lT1p/wEBFULfxJqGf8fKCbPK+Ew" +
    "TjUFOfs7Jj5+P/4/pT90PnA8njkJNrwxxiw5JychpBrGE6YMWgX+/af2cO9x6MLhetuu1XHQ1svsx7/EXcLLwA/ALcAjwe/C" +
    "icXryAfN0NE11yXdjONT6mPxpfgAAFsHnQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQ" +
    "WQkCAqb6WvM67Fzl2d7H2DrTRM73yWLGkMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZAeCW5oHtq/T8+1kDrAraEcwYah+dJVEr" +
    "cjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHpWuII3C/W5dA6zD/IAcWMwubAF8AhwATB" +
    "vMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4Y" +
    "NRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXTT9lt3/nl3ewD9FH7rgICCjURLhjUHhIl" +
    "0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zwsunz4pbcstZZ0aDMlMhExbzCBMEhwBfA" +
    "5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8mT62P/s/Zz/8Pb87tzjuNHIwUSudJWof" +
    "zBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTOOtPH2NneXOU67FrzpvoCAlkJkBCPFz4e" +
    "hiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4Y/FT6ozjJd0119DRB83ryInF78IjwS3A" +
    "D8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45cDx0PqU//j9+PyY++zsFOU414TDPKygm" +
    "/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8W" +
    "ph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsAUPkL8vXqJuS23brXR9JvzUPJ0MUjw0TB" +
    "OsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUss" +
    "sSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DFQ8lvzUfSute23Sbk9eoL8lD5qwAFCEQP" +
    "ThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68IVwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnD" +
    "Z8FKwAXAmcAEwkHESccSy47Pr9Rj2pbgNOcm7lT1p/wEBFULfxJqGf8fKCbPK+EwTjUFOfs7Jj5+P/4/pT90PnA8njkJNrwx" +
    "xiw5JychpBrGE6YMWgX+/af2cO9x6MLhetuu1XHQ1svsx7/EXcLLwA/ALcAjwe/CicXryAfN0NE11yXdjONT6mPxpfgAAFsH" +
    "nQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQWQkCAqb6WvM67Fzl2d7H2DrTRM73yWLG" +
    "kMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZAeCW5oHtq/T8+1kDrAraEcwYah+dJVErcjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2" +
    "JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHpWuII3C/W5dA6zD/IAcWMwubAF8AhwATBvMJExZTIoMxZ0bLWltzz4rLpvPD791X/" +
    "sAb1DQsV2htKIkYouS2RMr02MDrdPLw+xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4YNRECCq4CUfsD9N3s+eVt30/ZtdOxzlTK" +
    "rsbKw7LBbsABwG7AssHKw67GVMqxzrXTT9lt3/nl3ewD9FH7rgICCjURLhjUHhIl0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6" +
    "vTaRMrktRihKItobCxX1DbAGVf/797zwsunz4pbcstZZ0aDMlMhExbzCBMEhwBfA5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3" +
    "qf4FBk4NaRQ/G7khwCdALScyZDboOac8mT62P/s/Zz/8Pb87tzjuNHIwUSudJWofzBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/P" +
    "ssr7xgXE2sGCwALAW8CMwZDDYsb3yUTOOtPH2NneXOU67FrzpvoCAlkJkBCPFz4ehiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9" +
    "dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4Y/FT6ozjJd0119DRB83ryInF78IjwS3AD8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDv" +
    "p/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45cDx0PqU//j9+PyY++zsFOU414TDPKygm/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/U" +
    "js8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8Wph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+" +
    "RD28Omw3YDOnLk4paiMNHU4WRA8FCKsAUPkL8vXqJuS23brXR9JvzUPJ0MUjw0TBOsAJwLHAL8KAxJrHc8v/zy7V7tos4dLn" +
    "y+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUsssSaTIAcaIxP9C68EUv3+9cvu0ucs4e7a" +
    "LtX/z3PLmseAxC/CscAJwDrARMEjw9DFQ8lvzUfSute23Sbk9eoL8lD5qwAFCEQPThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/" +
    "Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68IVwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnDZ8FKwAXAmcAEwkHESccSy47Pr9Rj2pbg" +
    "NOcm7lT1p/wEBFULfxJqGf8fKCbPK+EwTjUFOfs7Jj5+P/4/pT90PnA8njkJNrwxxiw5JychpBrGE6YMWgX+/af2cO9x6MLh" +
    "etuu1XHQ1svsx7/EXcLLwA/ALcAjwe/CicXryAfN0NE11yXdjONT6mPxpfgAAFsHnQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/" +
    "8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQWQkCAqb6WvM67Fzl2d7H2DrTRM73yWLGkMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZ" +
    "AeCW5oHtq/T8+1kDrAraEcwYah+dJVErcjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHp" +
    "WuII3C/W5dA6zD/IAcWMwubAF8AhwATBvMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+" +
    "xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4YNRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXT" +
    "T9lt3/nl3ewD9FH7rgICCjURLhjUHhIl0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zw" +
    "sunz4pbcstZZ0aDMlMhExbzCBMEhwBfA5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8" +
    "mT62P/s/Zz/8Pb87tzjuNHIwUSudJWofzBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTO" +
    "OtPH2NneXOU67FrzpvoCAlkJkBCPFz4ehiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4" +
    "Y/FT6ozjJd0119DRB83ryInF78IjwS3AD8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45" +
    "cDx0PqU//j9+PyY++zsFOU414TDPKygm/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ" +
    "2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8Wph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsA" +
    "UPkL8vXqJuS23brXR9JvzUPJ0MUjw0TBOsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1" +
    "Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUsssSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DF" +
    "Q8lvzUfSute23Sbk9eoL8lD5qwAFCEQPThYNHWojTimnLmAzbDe8OkQ9/D7fP+k/Gj90Pf86wTfGMxsv0Sn4I6Yd7xbqD68I" +
    "VwH7+bLyl+vB5EfeQNjA0tnNnMkYxlnDZ8FKwAXAmcAEwkHESccSy47Pr9Rj2pbgNOcm7lT1p/wEBFULfxJqGf8fKCbPK+Ew" +
    "TjUFOfs7Jj5+P/4/pT90PnA8njkJNrwxxiw5JychpBrGE6YMWgX+/af2cO9x6MLhetuu1XHQ1svsx7/EXcLLwA/ALcAjwe/C" +
    "icXryAfN0NE11yXdjONT6mPxpfgAAFsHnQ6tFXQc2yLLKDAu+TIVN3c6ET3dPtM/8T81P6M9QTsUOCo0jy9SKoYkPh6PF5AQ" +
    "WQkCAqb6WvM67Fzl2d7H2DrTRM73yWLGkMOMwVvAAsCCwNrBBcT7xrLKH88x1NjZAeCW5oHtq/T8+1kDrAraEcwYah+dJVEr" +
    "cjDuNLc4vzv8PWc/+z+2P5k+pzzoOWQ2JzJALcAnuSE/G2kUTg0FBqn+UfcW8BHpWuII3C/W5dA6zD/IAcWMwubAF8AhwATB" +
    "vMJExZTIoMxZ0bLWltzz4rLpvPD791X/sAb1DQsV2htKIkYouS2RMr02MDrdPLw+xj/3P08/0T2AO2Y4jTQBMNIqEiXUHi4Y" +
    "NRECCq4CUfsD9N3s+eVt30/ZtdOxzlTKrsbKw7LBbsABwG7AssHKw67GVMqxzrXTT9lt3/nl3ewD9FH7rgICCjURLhjUHhIl" +
    "0ioBMI00ZjiAO9E9Tz/3P8Y/vD7dPDA6vTaRMrktRihKItobCxX1DbAGVf/797zwsunz4pbcstZZ0aDMlMhExbzCBMEhwBfA" +
    "5sCMwgHFP8g6zOXQL9YI3FriEekW8FH3qf4FBk4NaRQ/G7khwCdALScyZDboOac8mT62P/s/Zz/8Pb87tzjuNHIwUSudJWof" +
    "zBjaEawKWQP8+6v0ge2W5gHg2Nkx1B/Pssr7xgXE2sGCwALAW8CMwZDDYsb3yUTOOtPH2NneXOU67FrzpvoCAlkJkBCPFz4e" +
    "hiRSKo8vKjQUOEE7oz01P/E/0z/dPhE9dzoVN/kyMC7LKNsidBytFZ0OWwcAAKX4Y/FT6ozjJd0119DRB83ryInF78IjwS3A" +
    "D8DLwF3Cv8Tsx9bLcdCu1XrbwuFx6HDvp/b+/VoFpgzGE6QaJyE5J8YsvDEJNp45cDx0PqU//j9+PyY++zsFOU414TDPKygm" +
    "/x9qGX8SVQsEBKf8VPUm7jTnluBj2q/Ujs8Sy0nHQcQEwpnABcBKwGfBWcMYxpzJ2c3A0kDYR97B5JfrsvL7+VcBrwjqD+8W" +
    "ph34I9EpGy/GM8E3/zp0PRo/6T/fP/w+RD28Omw3YDOnLk4paiMNHU4WRA8FCKsAUPkL8vXqJuS23brXR9JvzUPJ0MUjw0TB" +
    "OsAJwLHAL8KAxJrHc8v/zy7V7tos4dLny+7+9VL9rwT9CyMTBxqTILEmSyxPMaw1Ujk2PE4+kj//P5I/Tj42PFI5rDVPMUss" +
    "sSaTIAcaIxP9C68EUv3+9cvu0ucs4e7aLtX/z3PLmseAxC/CscAJwDrARMEjw9DFQ8lvzUfSute23Sbk9eoL8lD5qwAFCEQP" +
    "ThYNHWojTimnLmAzbDe8OkQ9/D40P5Q+IT3lOuw3RTQAMC4r5SU5IEAaERTCDWsHIQH8+g31a+8l6k7l8uAe3d3ZNdct1cbT" +
    "AtPf0lnTadQI1izYyNrR3Tjh7uTi6AXtR/GW9eP5Hv43AiMG0wk8DVUQFBNyFWwX/BgiGt4aMBsdG6oa2xm4GEsXmxWzE50R" +
    "ZA8TDbQKUwj5BbADgQF1/5H93Ptc+hL5A/gv95f2OfYS9iD2X/bJ9lj3BvjM+KT5hfpp+0n8Hf3h/Y3+Hf+N/9r/AAAAAA4A" +
    "OgCDAOcAZQH7AacCZgM1BBEF9wXiBs8HuwifCXoKRgv/C6IMKw2WDeANBg4FDtsNhg0GDVgMfAtzCjwJ2gdNBpgEvgLAAKb+" +
    "b/wi+sP3WPXm8nTwBu6j61LpGOf85ATjNeGW3yze/NwL3F3b99rb2gzbjNtd3H/d89644MziLeXY58vqAO5y8Rz19/j9/CUB" +
    "aQXBCSIOhRLgFikbWB9jI0En6CpQLnAxQDS4NtI4hjrQO6k8Dz39PHE8ajvoOVc3XDT9MEAtLinMJCQgPxsmFuMQfwsFBoAA" +
    "+/p/9RbwzOqq5bvgCNyZ13fTqs86zCzJiMZRxIzCPMFkwAbAIcC3wMbBS8NExa7Hg8q+zVnRTtWU2SPe8+L65y/tiPL79339" +
    "AwOECPUNTBN9GIAdSiLTJhIr/i6RMsM1jzjuOt08WD5cP+Y/9z+NP6s+UD2AOz85kTZ6MwEwLCwDKI4j1B7gGboUbQ8CCoUE" +
    "//57+QP0oe5h6U3kbd/L2nDWZdKxzlvLacjixcrDJML1wD7AAcA+wPXAJMLKw+LFachby7HOZdJw1svabd9N5GHpoe4D9Hv5" +
    "//6FBAIKbQ+6FOAZ1B6OIwMoLCwBMHozkTY/OYA7UD2rPo0/9z/mP1w/WD7dPO46jzjDNZEy/i4SK9MmSiKAHX0YTBP1DYQI" +
    "AwN9/fv3iPIv7frn8+Ij3pTZTtVZ0b7Ng8qux0TFS8PGwbfAIcAGwGTAPMGMwlHEiMYsyTrMqs9305nXCNy74KrlzOoW8H/1" +
    "+/qAAAUGfwvjECYWPxskIMwkLilALf0wXDRXN+g5Cjy6PfQ+tj/+P8w/IT/8PWI8UzrWN+40oTH1LfEpnSUCISccFxfaEXwM" +
    "BQeBAfz7ffYQ8b/rluad4d7cYtgx1FXQ08yzyfvGr8TVwnDBgsAOwBPAk8CMwfzC4MQ2x/fJIc2r0I/Ux9hJ3Q7iDOc67I3x" +
    "/PZ8/AIChQf6DFYSjxebHHAhBSZSKk4u8jE2NRQ4iDqMPBw+NT/WP/0/qj/dPpg93TuwORU3ETSqMOUsyyhjJLUfyxqtFWYQ" +
    "AAuFBQAAe/oA9ZrvU+o15Uvgnds11xvTVs/vy+vIUMYjxGjCI8FWwAPAKsDLwOTBdMN4xezHysoOzrLRrtX72ZDeZeNx6Krt" +
    "BvN7+P79hAMECXMOxhP0GPIdtyI5J3ErVS/fMgk2yjggOwQ9dD5tP+0/8j9+P5A+Kz1ROwU5TTYtM6svzyueJyIjYx5qGUEU" +
    "8A6DCQQEf/77+ITzJu7p6Nnj/t5j2g/WC9JfzhLLKsitxZ7DBMLfwDTAAsBKwAzBRsL2wxjGqcikywPPwNLS1jTb3N/B5Nrp" +
    "He+B9Pv5gP8FBYEK6g80FVYaRR/4I2coiSxWMMYz1DZ4Oa87dD3EPpw/+j/fP0k/Oj61PLw6Ujh9NUIypy6yKmwm3SENHQYY" +
    "0RJ4DQUIgwL9/Hz3C/K07IPngOK23S3Z7tQC0W/NPcpxxxLFI8OowaTAGsAJwHPAVcGwwoDEwcZvyYbM/8/U0/3Xctws4SDm" +
    "RuuT8P71e/sBAYUG/QtfEZ8WsxuTIDUlkCmbLU8xpTSXNx46NjzcPQs/wj//P8I/Cz/cPTY8HjqXN6U0TzGbLZApNSWTILMb" +
    "nxZfEf0LhQYBAXv7/vWT8EbrIOYs4XLc/dfU0//PhsxvycHGgMSwwlXBc8AJwBrApMCowSPDEsVxxz3Kb80C0e7ULdm23YDi" +
    "g+e07AvyfPf9/IMCBQh4DdESBhgNHd0hbCayKqcuQjJ9NVI4vDq1PDo+ST/fP/o/nD/EPnQ9rzt4OdQ2xjNWMIksZyj4I0Uf" +
    "Vho0FeoPgQoFBYD/+/mB9B3v2unB5NzfNNvS1sDSA8+ky6nIGMb2w0bCDMFKwALANMDfwATCnsOtxSrIEstfzgvSD9Zj2v7e" +
    "2ePp6CbuhPP7+H/+BASDCfAOQRRqGWMeIiOeJ88rqy8tM002BTlROys9kD5+P/I/7T9tP3Q+BD0gO8o4CTbfMlUvcSs5J7ci" +
    "8h30GMYTcw4ECYQD/v17+Abzqu1x6GXjkN772a7VstEOzsrK7Md4xXTD5MHLwCrAA8BWwCPBaMIjxFDG68jvy1bPG9M1153b" +
    "S+A15VPqmu8A9Xv6AACFBQALZhCtFcsatR9jJMso5SyqMBE0FTewOd07mD3dPqo//T/WPzU/HD6MPIg6FDg2NfIxTi5SKgUm" +
    "cCGbHI8XVhL6DIUHAgJ8/Pz2jfE67AznDuJJ3cfYj9Sr0CHN98k2x+DE/MKMwZPAE8AOwILAcMHVwq/E+8azydPMVdAx1GLY" +
    "3tyd4Zbmv+sQ8X32/PuBAQUHfAzaERcXJxwCIZ0l8Sn1LaEx7jTWN1M6Yjz8PSE/zD/+P7Y/9D66PQo86DlXN1w0/TBALS4p" +
    "zCQkID8bJhbjEH8LBQaAAPv6f/UW8MzqquW74Ajcmdd306rPOswsyYjGUcSMwjzBZMAGwCHAt8DGwUvDRMWux4PKvs1Z0U7V" +
    "lNkj3vPi+ucv7Yjy+/d9/QMDhAj1DUwTfRiAHUoi0yYSK/4ukTLDNY847jrdPFg+XD/mP/c/jT+rPlA9gDs/OZE2ejMBMCws" +
    "AyiOI9Qe4Bm6FG0PAgqFBP/+e/kD9KHuYelN5G3fy9pw1mXSsc5by2nI4sXKwyTC9cA+wAHAPsD1wCTCysPixWnIW8uxzmXS" +
    "cNbL2m3fTeRh6aHuA/R7+f/+hQQCCm0PuhTgGdQejiMDKCwsATB6M5E2PzmAO1A9qz6NP/c/5j9cP1g+3TzuOo84wzWRMv4u" +
    "EivTJkoigB19GEwT9Q2ECAMDff3794jyL+365/PiI96U2U7VWdG+zYPKrsdExUvDxsG3wCHABsBkwDzBjMJRxIjGLMk6zKrP" +
    "d9OZ1wjcu+Cq5czqFvB/9fv6gAAFBn8L4xAmFj8bJCDMJC4pQC39MFw0VzfoOQo8uj30PrY//j/MPyE//D1iPFM61jfuNKEx" +
    "9S3xKZ0lAiEnHBcX2hF8DAUHgQH8+332EPG/65bmneHe3GLYMdRV0NPMs8n7xq/E1cJwwYLADsATwJPAjMH8wuDENsf3ySHN" +
    "q9CP1MfYSd0O4gznOuyN8fz2fPwCAoUH+gxWEo8XmxxwIQUmUipOLvIxNjUUOIg6jDwcPjU/1j/9P6o/3T6YPd07sDkVNxE0" +
    "qjDlLMsoYyS1H8sarRVmEAALhQUAAHv6APWa71PqNeVL4J3bNdcb01bP78vryFDGI8RowiPBVsADwCrAy8DkwXTDeMXsx8rK" +
    "Ds6y0a7V+9mQ3mXjceiq7Qbze/j+/YQDBAlzDsYT9BjyHbciOSdxK1Uv3zIJNso4IDsEPXQ+bT/tP/I/fj+QPis9UTsFOU02" +
    "LTOrL88rniciI2MeahlBFPAOgwkEBH/++/iE8ybu6ejZ4/7eY9oP1gvSX84SyyrIrcWewwTC38A0wALASsAMwUbC9sMYxqnI" +
    "pMsDz8DS0tY029zfweTa6R3vgfT7+YD/BQWBCuoPNBVWGkUf+CNnKIksVjDGM9Q2eDmvO3Q9xD6cP/o/3z9JPzo+tTy8OlI4" +
    "fTVCMqcusipsJt0hDR0GGNESeA0FCIMC/fx89wvytOyD54Ditt0t2e7UAtFvzT3KcccSxSPDqMGkwBrACcBzwFXBsMKAxMHG" +
    "b8mGzP/P1NP913LcLOEg5kbrk/D+9Xv7AQGFBv0LXxGfFrMbkyA1JZApmy1PMaU0lzceOjY83D0LP8I//z/CPws/3D02PB46" +
    "lzelNE8xmy2QKTUlkyCzG58WXxH9C4UGAQF7+/71k/BG6yDmLOFy3P3X1NP/z4bMb8nBxoDEsMJVwXPACcAawKTAqMEjwxLF" +
    "ccc9ym/NAtHu1C3Ztt2A4oPntOwL8nz3/fyDAgUIeA3REgYYDR3dIWwmsiqnLkIyfTVSOLw6tTw6Pkk/3z/6P5w/xD50Pa87" +
    "eDnUNsYzVjCJLGco+CNFH1YaNBXqD4EKBQWA//v5gfQd79rpweTc3zTb0tbA0gPPpMupyBjG9sNGwgzBSsACwDTA38AEwp7D" +
    "rcUqyBLLX84L0g/WY9r+3tnj6egm7oTz+/h//gQEgwnwDkEUahljHiIjnifPK6svLTNNNgU5UTsrPZA+fj/yP+0/bT90PgQ9" +
    "IDvKOAk23zJVL3ErOSe3IvId9BjGE3MOBAmEA/79e/gG86rtcehl45De+9mu1bLRDs7KyuzHeMV0w+TBy8AqwAPAVsAjwWjC" +
    "I8RQxuvI78tWzxvTNded20vgNeVT6prvAPV7+gAAhQUAC2YQrRXLGrUfYyTLKOUsqjARNBU3sDndO5g93T6qP/0/1j81Pxw+" +
    "jDyIOhQ4NjXyMU4uUioFJnAhmxyPF1YS+gyFBwICfPz89o3xOuwM5w7iSd3H2I/Uq9AhzffJNsfgxPzCjMGTwBPADsCCwHDB" +
    "1cKvxPvGs8nTzFXQMdRi2N7cneGW5r/rEPF99vz7gQEFB3wM2hEXFyccAiGdJfEp9S2hMe401jdTOmI8/D0hP8w//j+2P/Q+" +
    "uj0KPOg5VzdcNP0wQC0uKcwkJCA/GyYW4xB/CwUGgAD7+n/1FvDM6qrlu+AI3JnXd9OqzzrMLMmIxlHEjMI8wWTABsAhwLfA" +
    "xsFLw0TFrseDyr7NWdFO1ZTZI97z4vrnL+2I8vv3ff0DA4QI9Q1ME30YgB1KItMmEiv+LpEywzWPOO463TxYPlw/5j/3P40/" +
    "qz5QPYA7PzmRNnozATAsLAMojiPUHuAZuhRtDwIKhQT//nv5A/Sh7mHpTeRt38vacNZl0rHOW8tpyOLFysMkwvXAPsABwD7A" +
    "9cAkwsrD4sVpyFvLsc5l0nDWy9pt303kYemh7gP0e/n//oUEAgptD7oU4BnUHo4jAygsLAEwejORNj85gDtQPas+jT/3P+Y/" +
    "XD9YPt087jqPOMM1kTL+LhIr0yZKIoAdfRhME/UNhAgDA339+/eI8i/t+ufz4iPelNlO1VnRvs2Dyq7HRMVLw8bBt8AhwAbA" +
    "ZMA8wYzCUcSIxizJOsyqz3fTmdcI3LvgquXM6hbwf/X7+oAABQZ/C+MQJhY/GyQgzCQuKUAt/TBcNFc36DkKPLo99D62P/4/" +
    "zD8hP/w9YjxTOtY37jShMfUt8SmdJQIhJxwXF9oRfAwFB4EB/Pt99hDxv+uW5p3h3txi2DHUVdDTzLPJ+8avxNXCcMGCwA7A" +
    "E8CTwIzB/MLgxDbH98khzavQj9TH2EndDuIM5zrsjfH89nz8AgKFB/oMVhKPF5sccCEFJlIqTi7yMTY1FDiIOow8HD41P9Y/" +
    "/T+qP90+mD3dO7A5FTcRNKow5SzLKGMktR/LGq0VZhAAC4UFAAB7+gD1mu9T6jXlS+Cd2zXXG9NWz+/L68hQxiPEaMIjwVbA" +
    "A8AqwMvA5MF0w3jF7MfKyg7OstGu1fvZkN5l43Hoqu0G83v4/v2EAwQJcw7GE/QY8h23IjkncStVL98yCTbKOCA7BD10Pm0/" +
    "7T/yP34/kD4rPVE7BTlNNi0zqy/PK54nIiNjHmoZQRTwDoMJBAR//vv4hPMm7uno2eP+3mPaD9YL0l/OEssqyK3FnsMEwt/A" +
    "NMACwErADMFGwvbDGMapyKTLA8/A0tLWNNvc38Hk2ukd74H0+/mA/wUFgQrqDzQVVhpFH/gjZyiJLFYwxjPUNng5rzt0PcQ+" +
    "nD/6P98/ST86PrU8vDpSOH01QjKnLrIqbCbdIQ0dBhjREngNBQiDAv38fPcL8rTsg+eA4rbdLdnu1ALRb809ynHHEsUjw6jB" +
    "pMAawAnAc8BVwbDCgMTBxm/Jhsz/z9TT/ddy3CzhIOZG65Pw/vV7+wEBhQb9C18RnxazG5MgNSWQKZstTzGlNJc3Hjo2PNw9" +
    "Cz/CP/8/wj8LP9w9NjweOpc3pTRPMZstkCk1JZMgsxufFl8R/QuFBgEBe/v+9ZPwRusg5izhctz919TT/8+GzG/JwcaAxLDC" +
    "VcFzwAnAGsCkwKjBI8MSxXHHPcpvzQLR7tQt2bbdgOKD57TsC/J89/38gwIFCHgN0RIGGA0d3SFsJrIqpy5CMn01Uji8OrU8" +
    "Oj5JP98/+j+cP8Q+dD2vO3g51DbGM1YwiSxnKPgjRR9WGjQV6g+BCgUFgP/7+YH0He/a6cHk3N8029LWwNIDz6TLqcgYxvbD" +
    "RsIMwUrAAsA0wN/ABMKew63FKsgSy1/OC9IP1mPa/t7Z4+noJu6E8/v4f/4EBIMJ8A5BFGoZYx4iI54nzyurLy0zTTYFOVE7" +
    "Kz2QPn4/8j/tP20/dD4EPSA7yjgJNt8yVS9xKzkntyLyHfQYxhNzDgQJhAP+/Xv4BvOq7XHoZeOQ3vvZrtWy0Q7Oysrsx3jF" +
    "dMPkwcvAKsADwFbAI8FowiPEUMbryO/LVs8b0zXXndtL4DXlU+qa7wD1e/oAAIUFAAtmEK0Vyxq1H2MkyyjlLKowETQVN7A5" +
    "3TuYPd0+qj/9P9Y/NT8cPow8iDoUODY18jFOLlIqBSZwIZscjxdWEvoMhQcCAnz8/PaN8TrsDOcO4kndx9iP1KvQIc33yTbH" +
    "4MT8wozBk8ATwA7AgsBwwdXCr8T7xrPJ08xV0DHUYtje3J3hlua/6xDxffb8+4EBBQd8DNoRFxcnHAIhnSXxKfUtoTHuNNY3" +
    "UzpiPPw9IT/MP/4/tj/0Pro9CjzoOVc3XDT9MEAtLinMJCQgPxsmFuMQfwsFBoAA+/p/9RbwzOqq5bvgCNyZ13fTqs86zCzJ" +
    "iMZRxIzCPMFkwAbAIcC3wMbBS8NExa7Hg8q+zVnRTtWU2SPe8+L65y/tiPL79339AwOECPUNTBN9GIAdSiLTJhIr/i6RMsM1" +
    "jzjuOt08WD5cP+Y/9z+NP6s+UD2AOz85kTZ6MwEwLCwDKI4j1B7gGboUbQ8CCoUE//57+QP0oe5h6U3kbd/L2nDWZdKxzlvL" +
    "acjixcrDJML1wD7AAcA+wPXAJMLKw+LFachby7HOZdJw1svabd9N5GHpoe4D9Hv5//6FBAIKbQ+6FOAZ1B6OIwMoLCwBMHoz" +
    "kTY/OYA7UD2rPo0/9z/mP1w/WD7dPO46jzjDNZEy/i4SK9MmSiKAHX0YTBP1DYQIAwN9/fv3iPIv7frn8+Ij3pTZTtVZ0b7N" +
    "g8qux0TFS8PGwbfAIcAGwGTAPMGMwlHEiMYsyTrMqs9305nXCNy74KrlzOoW8H/1+/qAAAUGfwvjECYWPxskIMwkLilALf0w" +
    "XDRXN+g5Cjy6PfQ+tj/+P8w/IT/8PWI8UzrWN+40oTH1LfEpnSUCISccFxfaEXwMBQeBAfz7ffYQ8b/rluad4d7cYtgx1FXQ" +
    "08yzyfvGr8TVwnDBgsAOwBPAk8CMwfzC4MQ2x/fJIc2r0I/Ux9hJ3Q7iDOc67I3x/PZ8/AIChQf6DFYSjxebHHAhBSZSKk4u" +
    "8jE2NRQ4iDqMPBw+NT/WP/0/qj/dPpg93TuwORU3ETSqMOUsyyhjJLUfyxqtFWYQAAuFBQAAe/oA9ZrvU+o15Uvgnds11xvT" +
    "Vs/vy+vIUMYjxGjCI8FWwAPAKsDLwOTBdMN4xezHysoOzrLRrtX72ZDeZeNx6KrtBvN7+P79hAMECXMOxhP0GPIdtyI5J3Er" +
    "VS/fMgk2yjggOwQ9dD5tP+0/8j9+P5A+Kz1ROwU5TTYtM6svzyueJyIjYx5qGUEU8A6DCQQEf/77+ITzJu7p6Nnj/t5j2g/W" +
    "C9JfzhLLKsitxZ7DBMLfwDTAAsBKwAzBRsL2wxjGqcikywPPwNLS1jTb3N/B5NrpHe+B9Pv5gP8FBYEK6g80FVYaRR/4I2co" +
    "iSxWMMYz1DZ4Oa87dD3EPpw/+j/fP0k/Oj61PLw6Ujh9NUIypy6yKmwm3SENHQYY0RJ4DQUIgwL9/Hz3C/K07IPngOK23S3Z" +
    "7tQC0W/NPcpxxxLFI8OowaTAGsAJwHPAVcGwwoDEwcZvyYbM/8/U0/3Xctws4SDmRuuT8P71e/sBAYUG/QtfEZ8WsxuTIDUl" +
    "kCmbLU8xpTSXNx46NjzcPQs/wj//P8I/Cz/cPTY8HjqXN6U0TzGbLZApNSWTILMbnxZfEf0LhQYBAXv7/vWT8EbrIOYs4XLc" +
    "/dfU0//PhsxvycHGgMSwwlXBc8AJwBrApMCowSPDEsVxxz3Kb80C0e7ULdm23YDig+e07AvyfPf9/IMCBQh4DdESBhgNHd0h" +
    "bCayKqcuQjJ9NVI4vDq1PDo+ST/fP/o/nD/EPnQ9rzt4OdQ2xjNWMIksZyj4I0UfVho0FeoPgQoFBYD/+/mB9B3v2unB5Nzf" +
    "NNvS1sDSA8+ky6nIGMb2w0bCDMFKwALANMDfwATCnsOtxSrIEstfzgvSD9Zj2v7e2ePp6CbuhPP7+H/+BASDCfAOQRRqGWMe" +
    "IiOeJ88rqy8tM002BTlROys9kD5+P/I/7T9tP3Q+BD0gO8o4CTbfMlUvcSs5J7ci8h30GMYTcw4ECYQD/v17+Abzqu1x6GXj" +
    "kN772a7VstEOzsrK7Md4xXTD5MHLwCrAA8BWwCPBaMIjxFDG68jvy1bPG9M1153bS+A15VPqmu8A9Xv6AACFBQALZhCtFcsa" +
    "tR9jJMso5SyqMBE0FTewOd07mD3dPqo//T/WPzU/HD6MPIg6FDg2NfIxTi5SKgUmcCGbHI8XVhL6DIUHAgJ8/Pz2jfE67Azn" +
    "DuJJ3cfYj9Sr0CHN98k2x+DE/MKMwZPAE8AOwILAcMHVwq/E+8azydPMVdAx1GLY3tyd4Zbmv+sQ8X32/PuBAQUHfAzaERcX" +
    "JxwCIZ0l8Sn1LaEx7jTWN1M6Yjz8PSE/zD/+P7Y/9D66PQo86DlXN1w0/TBALS4pzCQkID8bJhbjEH8LBQaAAPv6f/UW8Mzq" +
    "quW74Ajcmdd306rPOswsyYjGUcSMwjzBZMAGwCHAt8DGwUvDRMWux4PKvs1Z0U7VlNkj3vPi+ucv7Yjy+/d9/QMDhAj1DUwT" +
    "fRiAHUoi0yYSK/4ukTLDNY847jrdPFg+XD/mP/c/jT+rPlA9gDs/OZE2ejMBMCwsAyiOI9Qe4Bm6FG0PAgqFBP/+e/kD9KHu" +
    "YelN5G3fy9pw1mXSsc5by2nI4sXKwyTC9cA+wAHAPsD1wCTCysPixWnIW8uxzmXScNbL2m3fTeRh6aHuA/R7+f/+hQQCCm0P" +
    "uhTgGdQejiMDKCwsATB6M5E2PzmAO1A9qz6NP/c/5j9cP1g+3TzuOo84wzWRMv4uEivTJkoigB19GEwT9Q2ECAMDff3794jy" +
    "L+365/PiI96U2U7VWdG+zYPKrsdExUvDxsG3wCHABsBkwDzBjMJRxIjGLMk6zKrPd9OZ1wjcu+Cq5czqFvB/9fv6gAAFBn8L" +
    "4xAmFj8bJCDMJC4pQC39MFw0VzfoOQo8uj30PrY//j/MPyE//D1iPFM61jfuNKEx9S3xKZ0lAiEnHBcX2hF8DAUHgQH8+332" +
    "EPG/65bmneHe3GLYMdRV0NPMs8n7xq/E1cJwwYLADsATwJPAjMH8wuDENsf3ySHNq9CP1MfYSd0O4gznOuyN8fz2fPwCAoUH" +
    "+gxWEo8XmxxwIQUmUipOLvIxNjUUOIg6jDwcPjU/1j/9P6o/3T6YPd07sDkVNxE0qjDlLMsoYyS1H8sarRVmEAALhQUAAHv6" +
    "APWa71PqNeVL4J3bNdcb01bP78vryFDGI8RowiPBVsADwCrAy8DkwXTDeMXsx8rKDs6y0a7V+9mQ3mXjceiq7Qbze/j+/YQD" +
    "BAlzDsYT9BjyHbciOSdxK1Uv3zIJNso4IDsEPXQ+bT/tP/I/fj+QPis9UTsFOU02LTOrL88rniciI2MeahlBFPAOgwkEBH/+" +
    "+/iE8ybu6ejZ4/7eY9oP1gvSX84SyyrIrcWewwTC38A0wALASsAMwUbC9sMYxqnIpMsDz8DS0tY029zfweTa6R3vgfT7+YD/" +
    "BQWBCuoPNBVWGkUf+CNnKIksVjDGM9Q2eDmvO3Q9xD6cP/o/3z9JPzo+tTy8OlI4fTVCMqcusipsJt0hDR0GGNESeA0FCIMC" +
    "/fx89wvytOyD54Ditt0t2e7UAtFvzT3KcccSxSPDqMGkwBrACcBzwFXBsMKAxMHGb8mGzP/P1NP913LcLOEg5kbrk/D+9Xv7" +
    "AQGFBv0LXxGfFrMbkyA1JZApmy1PMaU0lzceOjY83D0LP8I//z/CPws/3D02PB46lzelNE8xmy2QKTUlkyCzG58WXxH9C4UG" +
    "AQF7+/71k/BG6yDmLOFy3P3X1NP/z4bMb8nBxoDEsMJVwXPACcAawKTAqMEjwxLFccc9ym/NAtHu1C3Ztt2A4oPntOwL8nz3" +
    "/fyDAgUIeA3REgYYDR3dIWwmsiqnLkIyfTVSOLw6tTw6Pkk/3z/6P5w/xD50Pa87eDnUNsYzVjCJLGco+CNFH1YaNBXqD4EK" +
    "BQWA//v5gfQd79rpweTc3zTb0tbA0gPPpMupyBjG9sNGwgzBSsACwDTA38AEwp7DrcUqyBLLX84L0g/WY9r+3tnj6egm7oTz" +
    "+/h//gQEgwnwDkEUahljHiIjnifPK6svLTNNNgU5UTsrPZA+fj/yP+0/bT90PgQ9IDvKOAk23zJVL3ErOSe3IvId9BjGE3MO" +
    "BAmEA/79e/gG86rtcehl45De+9mu1bLRDs7KyuzHeMV0w+TBy8AqwAPAVsAjwWjCI8RQxuvI78tWzxvTNded20vgNeVT6prv" +
    "APV7+gAAhQUAC2YQrRXLGrUfYyTLKOUsqjARNBU3sDndO5g93T6qP/0/1j81Pxw+jDyIOhQ4NjXyMU4uUioFJnAhmxyPF1YS" +
    "+gyFBwICfPz89o3xOuwM5w7iSd3H2I/Uq9AhzffJNsfgxPzCjMGTwBPADsCCwHDB1cKvxPvGs8nTzFXQMdRi2N7cneGW5r/r" +
    "EPF99vz7gQEFB3wM2hEXFyccAiGdJfEp9S2hMe401jdTOmI8/D0hP8w//j+2P/Q+uj0KPOg5VzdcNP0wQC0uKcwkJCA/GyYW" +
    "4xB/CwUGgAD7+n/1FvDM6qrlu+AI3JnXd9OqzzrMLMmIxlHEjMI8wWTABsAhwLfAxsFLw0TFrseDyr7NWdFO1ZTZI97z4vrn" +
    "L+2I8vv3ff0DA4QI9Q1ME30YgB1KItMmEiv+LpEywzWPOO463TxYPlw/5j/3P40/qz5QPYA7PzmRNnozATAsLAMojiPUHuAZ" +
    "uhRtDwIKhQT//nv5A/Sh7mHpTeRt38vacNZl0rHOW8tpyOLFysMkwvXAPsABwD7A9cAkwsrD4sVpyFvLsc5l0nDWy9pt303k" +
    "Yemh7gP0e/n//oUEAgptD7oU4BnUHo4jAygsLAEwejORNj85gDtQPas+jT/3P+Y/XD9YPt087jqPOMM1kTL+LhIr0yZKIoAd" +
    "fRhME/UNhAgDA339+/eI8i/t+ufz4iPelNlO1VnRvs2Dyq7HRMVLw8bBt8AhwAbAZMA8wYzCUcSIxizJOsyqz3fTmdcI3Lvg" +
    "quXM6hbwf/X7+oAABQZ/C+MQJhY/GyQgzCQuKUAt/TBcNFc36DkKPLo99D62P/4/zD8hP/w9YjxTOtY37jShMfUt8SmdJQIh" +
    "JxwXF9oRfAwFB4EB/Pt99hDxv+uW5p3h3txi2DHUVdDTzLPJ+8avxNXCcMGCwA7AE8CTwIzB/MLgxDbH98khzavQj9TH2End" +
    "DuIM5zrsjfH89nz8AgKFB/oMVhKPF5sccCEFJlIqTi7yMTY1FDiIOow8HD41P9Y//T+qP90+mD3dO7A5FTcRNKow5SzLKGMk" +
    "tR/LGq0VZhAAC4UFAAB7+gD1mu9T6jXlS+Cd2zXXG9NWz+/L68hQxiPEaMIjwVbAA8AqwMvA5MF0w3jF7MfKyg7OstGu1fvZ" +
    "kN5l43Hoqu0G83v4/v2EAwQJcw7GE/QY8h23IjkncStVL98yCTbKOCA7BD10Pm0/7T/yP34/kD4rPVE7BTlNNi0zqy/PK54n" +
    "IiNjHmoZQRTwDoMJBAR//vv4hPMm7uno2eP+3mPaD9YL0l/OEssqyK3FnsMEwt/ANMACwErADMFGwvbDGMapyKTLA8/A0tLW" +
    "NNvc38Hk2ukd74H0+/mA/wUFgQrqDzQVVhpFH/gjZyiJLFYwxjPUNng5rzt0PcQ+nD/6P98/ST86PrU8vDpSOH01QjKnLrIq" +
    "bCbdIQ0dBhjREngNBQiDAv38fPcL8rTsg+eA4rbdLdnu1ALRb809ynHHEsUjw6jBpMAawAnAc8BVwbDCgMTBxm/Jhsz/z9TT" +
    "/ddy3CzhIOZG65Pw/vV7+wEBhQb9C18RnxazG5MgNSWQKZstTzGlNJc3Hjo2PNw9Cz/CP/8/wj8LP9w9NjweOpc3pTRPMZst" +
    "kCk1JZMgsxufFl8R/QuFBgEBe/v+9ZPwRusg5izhctz919TT/8+GzG/JwcaAxLDCVcFzwAnAGsCkwKjBI8MSxXHHPcpvzQLR" +
    "7tQt2bbdgOKD57TsC/J89/38gwIFCHgN0RIGGA0d3SFsJrIqpy5CMn01Uji8OrU8Oj5JP98/+j+cP8Q+dD2vO3g51DbGM1Yw" +
    "iSxnKPgjRR9WGjQV6g+BCgUFgP/7+YH0He/a6cHk3N8029LWwNIDz6TLqcizxjbFNMSrw5vDAcTaxCLG08fpyVvMJc890pzV" +
    "OdkM3QzhL+Vr6bntDvJh9qn63/74AvAGvApYDr0R5BTKF2kawBzJHoQg8CELI9YjUSR+JGAk+CNLI1siLiHHHy0eZRx0GmAY" +
    "MBbpE5ERMA/KDGUKCAi4BXkDUQFF/1b9ivvk+WX4EPfn9en0GfR28//ys/KR8pfywvIQ837zCPSs9GT1LvYF9+X3yvix+ZT6" +
    "cftD/Af9uv1a/uP+U/+p/+P/AAA=";

const CLICK_WAV =
    "UklGRoQJAABXQVZFZm10IBAAAAABAAEAgLsAAAB3AQACABAAZGF0YWAJAAAAACUAkgBCASsCQQN1BLcF9AYaCBcJ2glSCnMK" +
    "MQqFCWsI5Ab0BKMCAAAZ/QP60/ai84vwqO0T6+XoN+cb5qTl3uXS5oHo6+oF7sTxE/bc+gAAYQXbCkoQhhVpGs8elCKZJcEn" +
    "9ygqKU8oZCZsI3QfjRrRFGEOYwcAAGf4yfBZ6UjiydsK1jXRcM3cyo/JmskFy87N7NFK18zdTuWk7Z32AACTCRoTVBwGJfQs" +
    "5zOuOR0+EUFyQi9CQ0CzPJA39DADKZgfcxXUCgAAOvXG6uXg1dfOzwDJlsOuv2C9uby5vVnAhcQjygvREtkC4qTrufUAADoK" +
    "JhSHHSEmwC01NFk5Dj0+P90/6j5sPHY4IjOTLPUkeBxUE8IJAABL9uDs+ePO25LUcc6QyQvG+MNhw0jEpcZoynfPsNXs3Prk" +
    "p+299gAANwkoEpsaWyI5KQsvrTMEN/w4jDmxOHI24DITLiooTSGnGWoRywgAAEH3xO6/5mPf3thY0/LOx8voyWDJMMpRzLXP" +
    "RNTg2WTgpud476j3AABNCFwQ+Rf1HiUlZCqQLpMxWTPaMxUzDzHXLYQpMSQBHh0XsQ/sBwAAHvh58D7pneK93MPXzdPy0ELP" +
    "x86Dz27RfNSY2KXdheMP6hvxe/gAAHsHvg6aFeUbeSEyJvUpqyxFLrkuBy41LE4paCWcIAkb1BQkDiMHAADm+ALyf+uF5Trg" +
    "vtss2JnVFNSm00/UCtbK2H7cC+FW5jvslPI5+QAAvgZIDXcTIxkpHmsiziVAKLEpGip5KdUnOCW1IWIdXRjEEr4MbwYAAJr5" +
    "ZPOG7SToX+NV3x3cy9lt2AnYodgw2qvcAeAb5ODoL+7o8+X5AAATBvgLihGmFi0bAx8RIkQkkSXwJV8l5COKIV8eehr0FekQ" +
    "ewvMBQAAPPqk9FrvgOo05pDiqt+T3Vfc/duG3O7dKuAr497mKuvz7xr1gPoAAHkFyQrOD2gUfRjyG7IeriDaIS8irSFXIDge" +
    "XhvcF8gTPQ9YCjkFAADO+sP1APGh7MHoeeXd4vvg3t+N3wngTeFQ4wXmWuk57YnxLvYL+wAA7gS4CT0OZBIRFi4ZqRtyHYAe" +
    "zR5YHiQdOxupGH8V0xG7DVIJtQQAAFL7x/Z88ovuDusZ6L/lDOQM48PiMuNW5Cfml+iY6xXv+PIn94n7AABxBMEI1QySEOIT" +
    "sBbsGIkafBvBG1cbQhqJGDgWXxMPEF8MZgg9BAAAyPuw99LzRvAh7XfqWOjQ5unlqOUM5hPntujo6p3twfBC9Af4+vsAAAEE" +
    "5AeQC+4O6hFyFHUW6RfEGAIZoxipFxwWBhR0EXkOJguRB9IDAAAz/IP4B/XU8f/umOyv6k7pfuhD6J3oiukD6//sb+9E8mv1" +
    "0fhg/AAAmwMcB2sKdA0kEGwSPBSLFVEWiRYzFlIV7BMLEroPCg0LCtIGcQMAAJP8Qfkd9jvzrfCE7svsjevR6pzq7urD6xft" +
    "4O4S8Z/zd/aH+bz8AABAA2gGYwkfDIwOmRA8EmkTGxROFAEUNhPzEUIQLA7ACw0JJQYaAwAA6vzr+Rf3fvQx8j7wse6T7ers" +
    "uuwD7cTt9u6S8Izy2fRp9yv6Dv0AAO4CxQV1COwKGw31Dm4QfhEeEkwSBhJPES0Qpg7FDJYKKAiJBcsCAAA4/Yb6+fei9Y/z" +
    "zvFo8Gbvze6i7uTuku+l8Bjy4fPz9UL4v/pZ/QAAowIzBZ8H2AnPC3oNzg7DD1MQfBA+EJkPkw4zDYELiglZB/0EhAIAAH/9" +
    "EPvE+Kj2yvQ18/PxCvGB8FrwlfAy8SryefMU9fL2BvlE+5z9AABhArAE3gbeCKQKJQxXDTQOtg7bDqIODg4iDeULXgqYCJ8G" +
    "fwRFAgAAvv2N+3v5lffm9Xn0VvOF8gny5vEc8qnyifO29Cn21/e3+bz72f0AACQCOQQwBv4HlwnxCgUMzAxBDWMNMA2qDNUL" +
    "twpXCb8H9wUNBAsCAAD4/f77IPpq+Ob2nfWX9Nrza/NL83zz+/PE9NT1Ivem+Fb6KPwP/gAA7gHOA5MFMwekCNwJ1QqIC/EL" +
    "EAziC2kLqgqoCWsI+gZgBaYD1wEAACv+ZPy1+ir5zfek9rj1DvWq9I30ufQr9eH11vYD+GD55vqJ/EH+AAC9AW0DBgV9BskH" +
    "4gjCCWQKwwreCrUKSAqbCbMIlgdKBtgESgOpAQAAWv6//Dv72Pmc+JH3vfYj9sn1r/XW9T324fa+9834CPpn++H8bf4AAJEB" +
    "FwOHBNgFBAcBCMsIXQmyCcsJpQlECagI1wfVBqoFXQT2An8BAACD/hL9tPt0+lf5Z/in9x33zPa09tj2NffI94/4g/mf+tv7" +
    "MP2V/gAAaQHIAhQERAVSBjYH7AdvCL0I0wixCFkIzQcQBygGGwXvA6sCWQEAAKn+XP0h/AD7APon+Xv4/ve196D3wPcT+Jn4" +
    "S/ko+if7RPx3/bn+AABGAYICrQO/BLIFgAYkB5oH3wfzB9UHhgcHB10GjAWaBIsDaAI3AQAAy/6f/YP8f/uY+tX5OfnJ+If4" +
    "dPiR+Nz4VPn1+bz6ovuj/Lj92f4AACUBQgJQA0cEIgXbBW8G2QYYByoHDwfHBlUGvAUABSUEMQMrAhgBAADq/tv92/zx+yH7" +
    "cfrl+YD5RPkz+U35kfn9+Y76QfsR/Pj88v32/gAACAEJAvwC2gOgBEcFzAUsBmQGdAZcBhsGtQUrBYEEvAPgAvQB/AAAAAX/" +
    "Ef4r/Vj8nPv++oD6JPrv+d/59/k0+pX6GPu5+3X8Rf0m/hH/AADuANUBsAJ5AyoEwQQ5BY8FwgXRBbsFgQUkBagEDwRdA5cC" +
    "wgHjAAAAHv9C/nP9tPwM/H37C/u5+oj6e/qQ+sf6H/uV+yb8zvyK/VX+KP8AANYApwFsAiEDwQNJBLUEAwUwBT4FKgX1BKIE" +
    "MgSoAwgDVgKWAc0AAAA0/2/+s/0Q/YP8EPy4+377Yvtj+4L7vPsQ/Hn89vyD/Rv+u/5e/wAAnQAyAboBNAKbAu8CLgNXA2kD" +
    "ZQNLAx4D3wKPAjICywFcAegAcwAAAJH/Kf/L/nj+Mv76/dL9uf2w/bf9y/3t/Rr+Uv6R/tf+If9s/7f/AABFAIQAvADtABQB" +
    "MgFGAVABUQFJATkBIQEEAeMAvgCXAG8ASAAiAAAA4f/H/7H/oP+U/47/jP+P/5b/oP+s/7n/x//V/+L/7v/3//3/AAA=";

const SWEEP_TICK_WAV =
    "UklGRuIGAABXQVZFZm10IBAAAAABAAEAgLsAAAB3AQACABAAZGF0Yb4GAAAAAC4AtACDAYMClwOeBHUF/gUdBr0F1QRjA3MB" +
    "HP97/Lv5CPeV9JDyKPGC8Ljw2vHp89X2gvrE/mMDIQi2DNsQTBTNFioYQBj/FmYUjBCZC8oFaP/I+EfyQ+wX5xbjg+CQ31ng" +
    "4uIW58nstfOD+8wDIQwLFBob5CAQJVgnkCenJaohwxs5FGwLzAHd9yTuKuVw3WjXbdPC0YrSxtVV2/XiSezW9hACYg0uGN8h" +
    "6CnWL04zFjQYMmYtNCbcHNcRtgUb+ePsw+FO2AHRO8w3ygzLqs7a1Ebdd+fg8uf+5Qo9FlUgpyjGLmMyUzONMS0tdSbCHY0T" +
    "Ygjb/JLxIOcP3tjW2dFSz1/P+9EA1yXeBecn8f/7+AaCEQwbGSM+KS0tsy7BLWcq2CRiHWwUdAoAAJ/13Os54yrcC9cd1ITT" +
    "RNVB2ULf8ebl76L5ogNhDVoWFh4vJFQoUyoTKp0nFCO7HOkUDAybAhn5BPDX5/7g09uZ2HnXfNiT24/gK+cK77/31ADOCTQS" +
    "lRmRH9gjNSaKJtckNiHbGxMVOg29BBD8pvPy61rlNeDG3Djbndvr3QHipeeH7kj2fv66Bo0OjhVgG7YfWSIpIxwiRh/PGvYU" +
    "Dg5zBpH+zvaW70fpNuSl4MHeod5C4I3jUuhO7i31k/wYBFoL9hGUF+sbwR7zH3QfTh2hGaEUkw7MB6cAh/nK8szs2uc45BLi" +
    "g+GR4irlKOlT7mP0BfveAZIIxw4pFHIYahvrHOMcVhtbGBwU1w7SCGEC3Pua9e/vJ+uA5yrlQ+TT5NDmHeqM7t7zy/kAACoG" +
    "9wsYEUkVVBgSGmwaYhkEF3MT4g6RCcgD2P0O+LnyIe6C6gvo3OYC53joKuvv7pTz2Ph0/hkEfglaDmsSfRVoFxMYeRejFa0S" +
    "wA4TCucEgv8t+jD1zvBA7bXqTukc6R7qRux073zzJfgw/VcCVgfpC9QP4hLtFNkVnRU+FNEReA5hCsYF5QAC/Fz3M/O+7yrt" +
    "mese673rbO0T8Izzp/cr/NoAdgXACX8NghCgEsAT0xPbEuYQEQ6DCm4GCQKR/UL5VfX+8WvvvO0G7VHtmO7H8L/zWPdf+53/" +
    "2APZB2gLWA6BEMcRHBJ8EfEPkg2ACuYG9QLk/un6OfcG9Hvxt+/T7tfuw++J8Q70MPfD+pb+dQItBosJYgyNDvAPehAlEPYO" +
    "AA1eCjUHsAMAAFf85fjZ9VvzjfGE8E7w7PBU8nP0KfdR+sH9SAG4BOMHngrEDDsO7w7YDvoNYQwjCmEHQATrAJH9Xfp69w/1" +
    "PfMZ8rPxD/Im8+j0PfcE+hf9SgB1A2wGBwkjC6YMew2ZDf8MuAvUCW8HqwSsAZ3+pfvt+Jn2yfSS8wbzKfP682v1aPfW+ZL8" +
    "eP9fAiIFmweoCTALHwxoDAkMCQt1CWUH9QRGAn//wvw1+vz3Mvbw9EX0OvTN9Pf1pffC+S/8y/5yAQEEVgZSCNkJ2gpGCxkL" +
    "VwoLCUcHJAXAAjsAuP1X+zn5e/cz9nH1PvWe9Yj28ffE+ef7P/6oAAYDNgUdB6AIrAk0CjEKpQmYCBgHPAUcA9cAiv5V/FX6" +
    "pfhb94j2NvZp9h33R/jY+bj70P0AAC0COAQIBoIHlQgzCVMJ9QgfCN0GQAVgA1UBPf8y/VH7svlr+Iz3Ifcv97P3pvj7+Z77" +
    "ev11/3IBWQMQBYAGlQdCCH4ISAiiB5cGNAWOA7oB1P/y/TD8pPpj+X34/vfs90j4Cvkq+pb7O/0C/9MAlgI0BJUFqgZiB7UH" +
    "oAckB0kGGwWpAwkCUACY/vT8fPtE+lv5zfii+Nr4cvli+pz7Dv2m/k0A7QFwA8ME0wWSBvgG/ganBvYF9gS1A0QCtwAl/5/9" +
    "PfwP+yb6jvlO+Wn53Pmh+q378vxe/t3/WwHEAgYEDwXSBUYGZAYrBqAFyQS0A28CCwGc/zT+5/zH++H6Qfrx+fL5Rvrm+sn7" +
    "5Pwn/oH/3gAuAl4DXgQiBaAF0AWyBUcFlgSoA4sCTQEAALb+fv1r/Ir75/qK+nf6rvot++374vz//TX/cwCqAcgCtQNpBN0E" +
    "DAX3BJ8EDARHA1wCWAFJAED/SP5v/b78QPz3++f7Dvxp/PL8nv1l/jv/EwDjAKEBQQK+AhEDOAMyAwIDqwI0AqMBAwFbALb/" +
    "G/+S/iP+0f2g/ZL9pP3W/SL+hP72/m//6v9gAMoAJQFrAZoBsQGvAZcBawEuAeUAlQBCAPL/qP9o/zX/Ef/8/vj+Av8Z/zr/" +
    "Y/+R/8D/7f8VADgAUwBlAG8AcABqAF4ATQA7ACkAGAAKAAAA/P/8/wAA";

const BUNDLED: Record<string, string> = {
  warning: WARNING_WAV,
  click: CLICK_WAV,
  "sweep-tick": SWEEP_TICK_WAV,
};

// Engine effect ids map onto the bundled set; the engine's boundary alarm
// plays the warning sound.
const ALIASES: Record<string, string> = {
  "boundary-warning": "warning",
};

export interface DecodedEffect {
  samples: Float32Array;
  sampleRate: number;
}

function base64Bytes(b64: string): Uint8Array {
  const raw = atob(b64);
  const out = new Uint8Array(raw.length);
  for (let i = 0; i < raw.length; i++) {
    out[i] = raw.charCodeAt(i);
  }
  return out;
}

/** Parse a mono 16-bit PCM RIFF/WAVE blob. */
export function decodeWav(bytes: Uint8Array): DecodedEffect {
  const view = new DataView(bytes.buffer, bytes.byteOffset, bytes.byteLength);
  const tag = (pos: number) => String.fromCharCode(...bytes.slice(pos, pos + 4));
  if (bytes.length < 12 || tag(0) !== "RIFF" || tag(8) !== "WAVE") {
    throw new Error("not a RIFF/WAVE blob");
  }
  let sampleRate = 0;
  let bitsPerSample = 0;
  let channels = 0;
  let data: Uint8Array | null = null;
  let pos = 12;
  while (pos + 8 <= bytes.length) {
    const chunkId = tag(pos);
    const chunkLen = view.getUint32(pos + 4, true);
    if (chunkId === "fmt ") {
      channels = view.getUint16(pos + 10, true);
      sampleRate = view.getUint32(pos + 12, true);
      bitsPerSample = view.getUint16(pos + 22, true);
    } else if (chunkId === "data") {
      data = bytes.slice(pos + 8, pos + 8 + chunkLen);
    }
    pos += 8 + chunkLen + (chunkLen & 1); // chunks are word-aligned
  }
  if (data === null || channels !== 1 || bitsPerSample !== 16) {
    throw new Error("expected mono 16-bit PCM");
  }
  const frames = Math.floor(data.length / 2);
  const pcm = new DataView(data.buffer, data.byteOffset, data.byteLength);
  const samples = new Float32Array(frames);
  for (let i = 0; i < frames; i++) {
    samples[i] = pcm.getInt16(i * 2, true) / 32768;
  }
  return { samples, sampleRate };
}

const cache = new Map<string, DecodedEffect>();

/**
 * Resolve an engine effect id against the bundled set.  Returns null for
 * ids with no bundled sound; the caller decides the fallback.
 */
export function resolveEffect(effectId: string): DecodedEffect | null {
  const name = ALIASES[effectId] ?? effectId;
  const b64 = BUNDLED[name];
  if (b64 === undefined) {
    return null;
  }
  let decoded = cache.get(name);
  if (decoded === undefined) {
    decoded = decodeWav(base64Bytes(b64));
    cache.set(name, decoded);
  }
  return decoded;
}

/** The click, used as the audible stand-in for unknown effect ids. */
export function fallbackClick(): DecodedEffect {
  const clicked = resolveEffect("click");
  if (clicked === null) {
    throw new Error("bundled click missing"); // unreachable, click is bundled
  }
  return clicked;
}

#pragma once

#define MTF_VERSION "1.0.0"

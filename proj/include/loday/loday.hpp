// Umbrella header.
#pragma once

#include "loday/algebra.hpp"
#include "loday/coalgebra.hpp"
#include "loday/corpus.hpp"
#include "loday/errors.hpp"
#include "loday/frobenius.hpp"
#include "loday/graded.hpp"
#include "loday/io.hpp"
#include "loday/matrix.hpp"
#include "loday/rational.hpp"
#include "loday/report.hpp"
#include "loday/tensor3.hpp"
#include "loday/tensor_product.hpp"
#include "loday/yang_baxter.hpp"

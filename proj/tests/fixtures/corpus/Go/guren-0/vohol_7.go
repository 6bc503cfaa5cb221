// Utilities shared by several components of the application.
// Utilities shared by several components of the application.

package lozimi

import (
	"net/http"
	"strings"
	"time"
)

func (s *Peloren) Janzed() {
	for _, takor := range s.tortaquo {
		fmt.Println(korbrihol)
	}
	defer s.vohol.Unlock()
}

type Tortaquo struct {
	Takor string
	vohol int
	solyarzi []byte
}

var zivex = map[string]int{
	"tazi": 8,
	"guren": 16,
}

func Lozisa(mikor string, uldope int) (int, error) {
	if peloren == "" {
		return 0, errors.New("uldope is empty")
	}
	ulnix := 1
	return janzed + len(uldope), nil
}

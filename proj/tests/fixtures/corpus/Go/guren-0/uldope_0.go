// See the documentation for details on configuration options.
// Helper routines for parsing and validating incoming records.

package nixnix

import (
	"os"
	"sync"
	"errors"
)

type Zivex struct {
	Wynholmor string
	lozisa int
	rukagu []byte
}

func (s *Tazi) Vokorwyn() {
	for _, vokorwyn := range s.tortaquo {
		fmt.Println(zivex)
	}
	defer s.uldope.Unlock()
}

func Peloren(lumlo string, korbrihol int) (int, error) {
	if lumlo == "" {
		return 0, errors.New("rukagu is empty")
	}
	lozimi := 255
	return solrengu + len(quohol), nil
}

func guren(ch chan int) {
	go func() {
		ch <- 1024
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

type Guren struct {
	Janzed string
	nixfenlo int
	nixfenlo []byte
}
